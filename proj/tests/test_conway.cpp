#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "twobridge/conway.hpp"

using tb::ConwayForm;
using tb::Int;

TEST_SUITE("conway") {

TEST_CASE("parse maps text (outermost first) onto innermost-first storage") {
    const ConwayForm k = ConwayForm::parse("4,-2,2,-4");
    CHECK(k.genus() == 2);
    CHECK(k.b(1) == 1);
    CHECK(k.c(1) == -2);
    CHECK(k.b(2) == 2);
    CHECK(k.c(2) == -1);
    CHECK(ConwayForm::parse(" C[4,-2,2,-4] ") == k);
    CHECK(ConwayForm::parse("4, -2, 2, -4") == k);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(ConwayForm::parse(""), tb::parse_error);
    CHECK_THROWS_AS(ConwayForm::parse("2,x"), tb::parse_error);
    CHECK_THROWS_AS(ConwayForm::parse("2,-2,2"), tb::validation_error);
    CHECK_THROWS_AS(ConwayForm::parse("3,-2"), tb::validation_error);
    CHECK_THROWS_AS(ConwayForm::parse("2,2"), tb::validation_error);
    CHECK_THROWS_AS(ConwayForm::parse("-2,2"), tb::validation_error);
    CHECK_THROWS_AS(ConwayForm::parse("2,0"), tb::validation_error);
}

TEST_CASE("constructor validates sign patterns and lengths") {
    CHECK_THROWS_AS(ConwayForm({}, {}), tb::validation_error);
    CHECK_THROWS_AS(ConwayForm({1, 1}, {-1}), tb::validation_error);
    CHECK_THROWS_AS(ConwayForm({0}, {-1}), tb::validation_error);
    CHECK_THROWS_AS(ConwayForm({1}, {1}), tb::validation_error);
    CHECK_THROWS_AS(ConwayForm({1}, {0}), tb::validation_error);
}

TEST_CASE("size measures") {
    const ConwayForm k({1, 2}, {-2, -1});  // C[4,-2,2,-4]
    CHECK(k.complexity() == 6);
    CHECK(k.crossing_count() == 12);
    CHECK(k.delta() == 2);
    const ConwayForm t({1, 1, 1}, {-1, -1, -1});
    CHECK(t.delta() == 0);
    CHECK(t.is_torus_2k());
    CHECK_FALSE(k.is_torus_2k());
}

TEST_CASE("mirror symmetry reverses and negates the parameter list") {
    const ConwayForm k = ConwayForm::parse("4,-2");
    CHECK(k.mirror_symmetry() == ConwayForm::parse("2,-4"));
    CHECK(k.mirror_symmetry().mirror_symmetry() == k);
    // C[4,-2,2,-4] is fixed by the symmetry.
    const ConwayForm amphi = ConwayForm::parse("4,-2,2,-4");
    CHECK(amphi.mirror_symmetry() == amphi);
}

TEST_CASE("truncate keeps the innermost pairs") {
    const ConwayForm k = ConwayForm::parse("4,-2,2,-4");
    CHECK(k.truncate(1) == ConwayForm::parse("2,-4"));
    CHECK(k.truncate(2) == k);
    CHECK_THROWS_AS(k.truncate(0), std::out_of_range);
    CHECK_THROWS_AS(k.truncate(3), std::out_of_range);
}

TEST_CASE("neighbor moves bump one parameter") {
    const ConwayForm t = ConwayForm::parse("2,-2");
    CHECK(t.neighbor(1, tb::MoveKind::b_plus) == ConwayForm::parse("4,-2"));
    CHECK(t.neighbor(1, tb::MoveKind::c_minus) == ConwayForm::parse("2,-4"));
    const ConwayForm k = ConwayForm::parse("4,-2,2,-4");
    CHECK(k.neighbor(2, tb::MoveKind::b_plus) == ConwayForm::parse("6,-2,2,-4"));
    CHECK_THROWS_AS(k.neighbor(0, tb::MoveKind::b_plus), std::out_of_range);
}

TEST_CASE("fraction recurrence and determinants") {
    const ConwayForm t = ConwayForm::parse("2,-2");
    const auto seq = t.fraction_sequence();
    REQUIRE(seq.size() == 2);
    CHECK(seq[0].d == 1);
    CHECK(seq[0].p == 0);
    CHECK(seq[1].d == 3);
    CHECK(seq[1].p == 2);
    CHECK(t.determinant() == 3);

    CHECK(ConwayForm::parse("2,-4").determinant() == 7);
    CHECK(ConwayForm::parse("4,-2").determinant() == 7);
    CHECK(ConwayForm::parse("2,-2,2,-2").determinant() == 5);
    CHECK(ConwayForm::parse("4,-2,2,-4").determinant() == 33);
    CHECK(ConwayForm::parse("2,-2,8,-2").determinant() == 41);

    const ConwayForm k = ConwayForm::parse("4,-2,2,-4");
    CHECK(k.fraction(1).d == 7);
    CHECK(k.fraction(2).d == 33);
    CHECK_THROWS_AS(k.fraction(0), std::out_of_range);

    // The determinant of a truncate equals the matching d_j.
    CHECK(k.truncate(1).determinant() == k.fraction(1).d);
}

TEST_CASE("mirror symmetry preserves the determinant") {
    const std::vector<ConwayForm> forms = {
        ConwayForm::parse("4,-2"), ConwayForm::parse("4,-2,2,-6"),
        ConwayForm::parse("2,-2,4,-2,2,-2"), ConwayForm::parse("6,-4,2,-2")};
    for (const auto& k : forms) {
        CHECK(k.mirror_symmetry().determinant() == k.determinant());
        CHECK(k.mirror_symmetry().complexity() == k.complexity());
    }
}

TEST_CASE("keys and round trips") {
    const ConwayForm k = ConwayForm::parse("4,-2,2,-4");
    CHECK(k.key() == "g=2;b=1,2;c=-2,-1");
    CHECK(k.bracket_text() == "C[4,-2,2,-4]");
    CHECK(ConwayForm::parse(k.bracket_text()) == k);

    const ConwayForm a = ConwayForm::parse("4,-2");
    const ConwayForm b = ConwayForm::parse("2,-4");
    CHECK(a.canonical_key() == b.canonical_key());
    CHECK(a.canonical_key() == b.key());
    CHECK(k.canonical_key() == k.key());
}

}  // TEST_SUITE
