#include "twobridge/report.hpp"

#include <json.hpp>

#include <sstream>

#include "twobridge/gauss_forms.hpp"
#include "twobridge/jones.hpp"
#include "twobridge/seifert.hpp"

namespace tb {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

/// JSON number when the value fits a 64-bit integer, else a decimal string.
ordered_json int_json(const Int& v) {
  if (v.fits_slong_p()) return ordered_json(v.get_si());
  return ordered_json(v.get_str());
}

ordered_json density_json(const DensityEstimate& d) {
  ordered_json j;
  j["N"] = d.N;
  j["p_max"] = d.p_max;
  j["window_min"] = rat_string(d.window_min);
  j["window_max"] = rat_string(d.window_max);
  j["torus_lower_bound"] = rat_string(d.torus_lower_bound);
  return j;
}

ordered_json report_json_obj(const ObstructionReport& r) {
  ordered_json j;
  j["key"] = r.key;
  j["g"] = r.g;
  j["det"] = int_json(r.det);
  j["a2"] = int_json(r.a2);
  j["a4"] = int_json(r.a4);
  j["four_v3"] = int_json(r.four_v3);
  j["slope_lmo"] = rat_string(r.slope_lmo);
  j["slope_hf"] = rat_string(r.slope_hf);
  j["main_ineq"] = r.main_ineq;
  j["equality_violated"] = r.equality_violated;
  if (r.density_window) {
    j["density_window"] = density_json(*r.density_window);
  } else {
    j["density_window"] = nullptr;
  }
  j["hypotheses"] = ordered_json{
      {"a2_gt_one", r.hypotheses.a2_gt_one},
      {"four_v3_positive", r.hypotheses.four_v3_positive},
      {"thin", r.hypotheses.thin},
      {"not_l_space", r.hypotheses.not_l_space},
      {"tau_equals_genus", r.hypotheses.tau_equals_genus}};
  j["verdict"] = verdict_name(r.verdict);
  return j;
}

}  // namespace

std::string rat_string(const Rat& q) { return q.get_str(); }

std::string csv_header() {
  return "key,g,det,a2,a4,four_v3,slope_lmo,slope_hf,main_ineq,"
         "equality_violated,verdict";
}

std::string csv_row(const ObstructionReport& r) {
  std::ostringstream os;
  // The key holds commas; quote it so the fixed column layout survives.
  os << '"' << r.key << '"' << ',' << r.g << ',' << r.det.get_str() << ','
     << r.a2.get_str() << ',' << r.a4.get_str() << ','
     << r.four_v3.get_str() << ',' << rat_string(r.slope_lmo) << ','
     << rat_string(r.slope_hf) << ',' << (r.main_ineq ? "true" : "false")
     << ',' << (r.equality_violated ? "true" : "false") << ','
     << verdict_name(r.verdict);
  return os.str();
}

std::string obstruction_json(const ObstructionReport& r) {
  return report_json_obj(r).dump(2);
}

std::string obstruction_text(const ObstructionReport& r) {
  std::ostringstream os;
  os << "key                " << r.key << '\n'
     << "genus              " << r.g << '\n'
     << "det                " << r.det.get_str() << '\n'
     << "a2                 " << r.a2.get_str() << '\n'
     << "a4                 " << r.a4.get_str() << '\n'
     << "4v3                " << r.four_v3.get_str() << '\n'
     << "slope_lmo          " << rat_string(r.slope_lmo) << '\n'
     << "slope_hf           " << rat_string(r.slope_hf) << '\n'
     << "main_ineq          " << (r.main_ineq ? "true" : "false") << '\n'
     << "equality_violated  " << (r.equality_violated ? "true" : "false")
     << '\n'
     << "verdict            " << verdict_name(r.verdict) << '\n';
  return os.str();
}

InvariantBundle compute_invariants(const ConwayForm& k) {
  InvariantBundle b;
  b.key = k.key();
  b.bracket = k.bracket_text();
  b.g = k.genus();
  b.complexity = k.complexity();
  b.crossings = k.crossing_count();
  b.det = k.determinant();
  b.a2 = a2_gauss(k);
  b.a4 = a4(k);
  b.four_v3 = four_v3_gauss(k);
  b.v3 = make_rat(b.four_v3, 4);
  b.signature = ordinary_signature(k);
  b.conway_z = conway_polynomial(k).to_string("z");
  b.alexander_t = alexander_t(k).to_string("t");
  b.jones_t = jones_polynomial(k).to_string("t");
  b.slope_lmo = slope_candidate_lmo(b.a2, b.a4, b.four_v3);
  b.slope_hf = slope_candidate_hf(b.det, b.g);
  return b;
}

std::string invariants_text(const InvariantBundle& b) {
  std::ostringstream os;
  os << "form          " << b.bracket << '\n'
     << "key           " << b.key << '\n'
     << "genus         " << b.g << '\n'
     << "complexity    " << b.complexity << '\n'
     << "crossings     " << b.crossings << '\n'
     << "det           " << b.det.get_str() << '\n'
     << "a2            " << b.a2.get_str() << '\n'
     << "a4            " << b.a4.get_str() << '\n'
     << "4v3           " << b.four_v3.get_str() << '\n'
     << "v3            " << rat_string(b.v3) << '\n'
     << "signature     " << b.signature << '\n'
     << "conway[z]     " << b.conway_z << '\n'
     << "alexander[t]  " << b.alexander_t << '\n'
     << "jones[t]      " << b.jones_t << '\n'
     << "slope_lmo     " << rat_string(b.slope_lmo) << '\n'
     << "slope_hf      " << rat_string(b.slope_hf) << '\n';
  return os.str();
}

std::string invariants_json(const InvariantBundle& b) {
  ordered_json j;
  j["form"] = b.bracket;
  j["key"] = b.key;
  j["g"] = b.g;
  j["complexity"] = b.complexity;
  j["crossings"] = b.crossings;
  j["det"] = int_json(b.det);
  j["a2"] = int_json(b.a2);
  j["a4"] = int_json(b.a4);
  j["four_v3"] = int_json(b.four_v3);
  j["v3"] = rat_string(b.v3);
  j["signature"] = b.signature;
  j["conway_z"] = b.conway_z;
  j["alexander_t"] = b.alexander_t;
  j["jones_t"] = b.jones_t;
  j["slope_lmo"] = rat_string(b.slope_lmo);
  j["slope_hf"] = rat_string(b.slope_hf);
  return j.dump(2);
}

void VerdictCounts::add(Verdict v) {
  switch (v) {
    case Verdict::excluded_torus_2k:
      ++excluded_torus_2k;
      break;
    case Verdict::no_ccs_main:
      ++no_ccs_main;
      break;
    case Verdict::no_ccs_equality:
      ++no_ccs_equality;
      break;
    case Verdict::inconclusive:
      ++inconclusive;
      break;
  }
}

long VerdictCounts::total() const {
  return excluded_torus_2k + no_ccs_main + no_ccs_equality + inconclusive;
}

bool RunReport::all_suites_passed() const {
  for (const auto& [name, ok] : suites) {
    if (!ok) return false;
  }
  return true;
}

std::string run_report_json(const RunReport& r, bool include_reports) {
  ordered_json j;
  j["spec"] = r.spec_echo;
  j["counts"] = ordered_json{
      {"excluded_torus_2k", r.counts.excluded_torus_2k},
      {"no_ccs_main", r.counts.no_ccs_main},
      {"no_ccs_equality", r.counts.no_ccs_equality},
      {"inconclusive", r.counts.inconclusive},
      {"total", r.counts.total()}};
  if (!r.suites.empty()) {
    ordered_json suites = ordered_json::object();
    for (const auto& [name, ok] : r.suites) suites[name] = ok;
    j["suites"] = suites;
  }
  if (!r.failures.empty()) {
    ordered_json fails = ordered_json::object();
    for (const auto& [name, detail] : r.failures) fails[name] = detail;
    j["failures"] = fails;
  }
  if (include_reports) {
    ordered_json list = ordered_json::array();
    for (const auto& rep : r.reports) list.push_back(report_json_obj(rep));
    j["reports"] = list;
  }
  j["wall_seconds"] = r.wall_seconds;
  return j.dump(2);
}

std::string run_report_csv(const RunReport& r) {
  std::ostringstream os;
  os << csv_header() << '\n';
  for (const auto& rep : r.reports) os << csv_row(rep) << '\n';
  return os.str();
}

}  // namespace tb
