#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twobridge/conway.hpp"
#include "twobridge/exactalg.hpp"
#include "twobridge/obstruction.hpp"

namespace tb {

/// Canonical text for an exact rational: "n" or "n/d", always reduced.
std::string rat_string(const Rat& q);

/// CSV header matching csv_row, in the fixed column order
/// key,g,det,a2,a4,four_v3,slope_lmo,slope_hf,main_ineq,equality_violated,verdict.
std::string csv_header();
std::string csv_row(const ObstructionReport& r);

/// JSON object for one ObstructionReport (field names match the struct).
std::string obstruction_json(const ObstructionReport& r);
/// Human-readable multi-line rendering of one ObstructionReport.
std::string obstruction_text(const ObstructionReport& r);

/// Everything the `invariants` subcommand prints for one form.
struct InvariantBundle {
  std::string key;
  std::string bracket;
  int g = 0;
  long complexity = 0;
  long crossings = 0;
  Int det;
  Int a2;
  Int a4;
  Int four_v3;
  Rat v3;
  int signature = 0;
  std::string conway_z;
  std::string alexander_t;
  std::string jones_t;
  Rat slope_lmo;
  Rat slope_hf;
};

InvariantBundle compute_invariants(const ConwayForm& k);
std::string invariants_text(const InvariantBundle& b);
std::string invariants_json(const InvariantBundle& b);

struct VerdictCounts {
  long excluded_torus_2k = 0;
  long no_ccs_main = 0;
  long no_ccs_equality = 0;
  long inconclusive = 0;

  void add(Verdict v);
  long total() const;
};

/// Aggregate result of a bulk run (enumeration, replay, or oracle suite).
struct RunReport {
  std::string spec_echo;
  VerdictCounts counts;
  std::vector<ObstructionReport> reports;
  /// (suite name, passed); empty for runs that carry no suites.
  std::vector<std::pair<std::string, bool>> suites;
  /// First failure detail per failing suite, aligned by name.
  std::vector<std::pair<std::string, std::string>> failures;
  double wall_seconds = 0.0;

  bool all_suites_passed() const;
};

/// Serialize a full run; include_reports=false drops the per-knot list
/// (counts and suites stay).
std::string run_report_json(const RunReport& r, bool include_reports = true);
/// CSV: header plus one row per report entry.
std::string run_report_csv(const RunReport& r);

}  // namespace tb
