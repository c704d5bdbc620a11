#pragma once

#include <string>

#include "twobridge/report.hpp"

namespace tb {

/// Grid sizes for the named-case replay.  Defaults finish in well under two
/// minutes on one core; large() widens every grid.
struct VerifyConfig {
  int chain_g_max = 10;   ///< genus upper bound for the genus >= 4 chains
  int chain_b_max = 10;   ///< b_g range in the genus >= 4 step-B family
  int linear_x_max = 20;  ///< one-parameter grids in the step-B cases
  int g2_grid = 6;        ///< genus-2 criterion/obstruction agreement grid
  int g3_grid = 10;       ///< genus-3 two-parameter family grids
  int family_grid = 8;    ///< closed-form match grids (per parameter)

  static VerifyConfig defaults() { return VerifyConfig{}; }
  static VerifyConfig large();
  /// Parse "key = value" lines; '#' starts a comment; unknown keys error.
  static VerifyConfig from_file(const std::string& path);
  static VerifyConfig from_text(const std::string& text);

  std::string echo() const;
};

/// Replay every named case of the genus >= 4 / genus 2 / genus 3 analysis
/// on the configured grids.  Any mismatch is recorded as a failed suite
/// with a minimal counterexample; the named witness knots are attached as
/// per-knot reports.
RunReport verify_paper(const VerifyConfig& config = VerifyConfig{});

struct OracleSpec {
  int max_complexity = 12;
};

/// Run the cross-oracle invariant suites (independent code paths for a2,
/// 4v3, determinant, Conway polynomial, signatures, and the family closed
/// forms) over the enumerated corpus.
RunReport oracle_check(const OracleSpec& spec = OracleSpec{});

}  // namespace tb
