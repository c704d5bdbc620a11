#include <doctest.h>

#include <json.hpp>

#include <string>
#include <vector>

#include "twobridge/conway.hpp"
#include "twobridge/enumerate.hpp"
#include "twobridge/exactalg.hpp"
#include "twobridge/obstruction.hpp"
#include "twobridge/report.hpp"

using tb::ConwayForm;
using tb::Dedup;
using tb::EnumerationSpec;
using tb::make_rat;
using tb::Rat;

namespace {

std::vector<ConwayForm> forms_up_to(int s, Dedup dedup = Dedup::none) {
    EnumerationSpec spec;
    spec.max_complexity = s;
    spec.dedup = dedup;
    return tb::enumerate_all(spec);
}

}  // namespace

TEST_SUITE("enumerate") {

TEST_CASE("expected counts follow the binomial formula") {
    CHECK(tb::expected_count(5, 2) == 4);
    CHECK(tb::expected_count(5, 1) == 4);
    CHECK(tb::expected_count(5) == 8);
    CHECK(tb::expected_count(2) == 1);
    for (int m = 2; m <= 9; ++m) {
        tb::Int total = 0;
        for (int g = 1; 2 * g <= m; ++g) {
            CHECK(tb::expected_count(m, g) == tb::binomial(m - 1, 2 * g - 1));
            total += tb::expected_count(m, g);
        }
        CHECK(total == tb::expected_count(m));
    }
}

TEST_CASE("enumeration is complete and deterministic") {
    const auto all = forms_up_to(5);
    REQUIRE(all.size() == 15);

    // ascending complexity, then genus, then lexicographic on
    // (b_1, -c_1, b_2, -c_2, ...)
    CHECK(all[0].bracket_text() == "C[2,-2]");
    CHECK(all[1].bracket_text() == "C[2,-4]");
    CHECK(all[2].bracket_text() == "C[4,-2]");
    CHECK(all[3].bracket_text() == "C[2,-6]");
    CHECK(all[4].bracket_text() == "C[4,-4]");
    CHECK(all[5].bracket_text() == "C[6,-2]");
    CHECK(all[6].bracket_text() == "C[2,-2,2,-2]");

    // per-complexity totals match the closed form
    for (int s = 2; s <= 8; ++s) {
        EnumerationSpec spec;
        spec.max_complexity = s;
        long n = 0;
        tb::enumerate(spec, [&](const ConwayForm&) { ++n; });
        tb::Int want = 0;
        for (int m = 2; m <= s; ++m) want += tb::expected_count(m);
        CHECK(tb::Int(n) == want);
    }
}

TEST_CASE("no form is visited twice") {
    std::vector<std::string> keys;
    EnumerationSpec spec;
    spec.max_complexity = 8;
    tb::enumerate(spec, [&](const ConwayForm& k) { keys.push_back(k.key()); });
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("symmetry dedup keeps one representative per mirror pair") {
    const auto s3 = forms_up_to(3, Dedup::symmetry);
    REQUIRE(s3.size() == 2);
    CHECK(s3[0].bracket_text() == "C[2,-2]");
    CHECK(s3[1].bracket_text() == "C[2,-4]");

    CHECK(forms_up_to(5, Dedup::symmetry).size() == 9);

    // every visited form is its own canonical representative
    for (const auto& k : forms_up_to(7, Dedup::symmetry)) {
        CHECK(k.key() == k.canonical_key());
    }
}

TEST_CASE("genus range filter") {
    EnumerationSpec spec;
    spec.max_complexity = 6;
    spec.genus_range = {{2, 2}};
    const auto picked = tb::enumerate_all(spec);
    tb::Int want = 0;
    for (int m = 4; m <= 6; ++m) want += tb::expected_count(m, 2);
    CHECK(tb::Int(static_cast<long>(picked.size())) == want);
    for (const auto& k : picked) CHECK(k.genus() == 2);
}

}  // TEST_SUITE

TEST_SUITE("report") {

TEST_CASE("rational rendering") {
    CHECK(tb::rat_string(make_rat(100, 11)) == "100/11");
    CHECK(tb::rat_string(Rat(5)) == "5");
    CHECK(tb::rat_string(make_rat(-48, 1)) == "-48");
    CHECK(tb::rat_string(make_rat(4, 8)) == "1/2");
}

TEST_CASE("csv header and row layout") {
    CHECK(tb::csv_header() ==
          "key,g,det,a2,a4,four_v3,slope_lmo,slope_hf,main_ineq,"
          "equality_violated,verdict");
    const auto r = tb::verdict(ConwayForm::parse("C[4,-2,2,-4]"));
    CHECK(tb::csv_row(r) ==
          "\"g=2;b=1,2;c=-2,-1\",2,33,8,4,22,100/11,10,false,true,"
          "no_ccs_equality");
}

TEST_CASE("obstruction json round-trips through a parser") {
    const auto r = tb::verdict(ConwayForm::parse("C[4,-2,2,-4]"));
    const auto j = nlohmann::json::parse(tb::obstruction_json(r));
    CHECK(j["key"] == "g=2;b=1,2;c=-2,-1");
    CHECK(j["g"] == 2);
    CHECK(j["det"] == 33);
    CHECK(j["a2"] == 8);
    CHECK(j["a4"] == 4);
    CHECK(j["four_v3"] == 22);
    CHECK(j["slope_lmo"] == "100/11");
    CHECK(j["slope_hf"] == "10");
    CHECK(j["main_ineq"] == false);
    CHECK(j["equality_violated"] == true);
    CHECK(j["density_window"].is_null());
    CHECK(j["hypotheses"]["a2_gt_one"] == true);
    CHECK(j["verdict"] == "no_ccs_equality");
}

TEST_CASE("invariant bundle for the trefoil") {
    const auto b = tb::compute_invariants(ConwayForm::parse("C[2,-2]"));
    CHECK(b.key == "g=1;b=1;c=-1");
    CHECK(b.bracket == "C[2,-2]");
    CHECK(b.g == 1);
    CHECK(b.complexity == 2);
    CHECK(b.crossings == 4);
    CHECK(b.det == 3);
    CHECK(b.a2 == 1);
    CHECK(b.a4 == 0);
    CHECK(b.four_v3 == 1);
    CHECK(b.v3 == make_rat(1, 4));
    CHECK(b.signature == 2);
    CHECK(b.conway_z == "1 + z^2");
    CHECK(b.alexander_t == "1 - t + t^2");
    CHECK(b.jones_t == "t + t^3 - t^4");
    CHECK(b.slope_lmo == Rat(3));
    CHECK(b.slope_hf == Rat(1));

    const auto j = nlohmann::json::parse(tb::invariants_json(b));
    CHECK(j["jones_t"] == "t + t^3 - t^4");
    CHECK(j["det"] == 3);
    const auto text = tb::invariants_text(b);
    CHECK(text.find("C[2,-2]") != std::string::npos);
    CHECK(text.find("1 + z^2") != std::string::npos);
}

TEST_CASE("verdict counters") {
    tb::VerdictCounts c;
    c.add(tb::Verdict::excluded_torus_2k);
    c.add(tb::Verdict::no_ccs_main);
    c.add(tb::Verdict::no_ccs_main);
    c.add(tb::Verdict::no_ccs_equality);
    CHECK(c.excluded_torus_2k == 1);
    CHECK(c.no_ccs_main == 2);
    CHECK(c.no_ccs_equality == 1);
    CHECK(c.inconclusive == 0);
    CHECK(c.total() == 4);
}

TEST_CASE("run report serialization") {
    tb::RunReport run;
    run.spec_echo = "enumerate max_complexity=3";
    EnumerationSpec spec;
    spec.max_complexity = 3;
    tb::enumerate(spec, [&](const ConwayForm& k) {
        auto r = tb::verdict(k);
        run.counts.add(r.verdict);
        run.reports.push_back(std::move(r));
    });
    run.suites.emplace_back("smoke", true);

    const auto j = nlohmann::json::parse(tb::run_report_json(run));
    CHECK(j["spec"] == "enumerate max_complexity=3");
    CHECK(j["counts"]["excluded_torus_2k"] == 1);
    CHECK(j["counts"]["total"] == 3);
    CHECK(j["reports"].size() == 3);
    CHECK(j["suites"]["smoke"] == true);

    const auto slim = nlohmann::json::parse(tb::run_report_json(run, false));
    CHECK(!slim.contains("reports"));

    const auto csv = tb::run_report_csv(run);
    CHECK(csv.rfind(tb::csv_header() + "\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

}  // TEST_SUITE
