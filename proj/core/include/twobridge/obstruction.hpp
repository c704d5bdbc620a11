#pragma once

#include <optional>
#include <string>
#include <utility>

#include "twobridge/conway.hpp"
#include "twobridge/exactalg.hpp"
#include "twobridge/seifert.hpp"

namespace tb {

/// Final classification of a positive 2-bridge form.
enum class Verdict {
  excluded_torus_2k,  ///< form is a (2,2g+1) torus knot; handled separately
  no_ccs_main,        ///< the main determinant/genus inequality excludes surgeries
  no_ccs_equality,    ///< the two candidate slopes disagree, excluding surgeries
  inconclusive        ///< neither obstruction applies
};

std::string verdict_name(Verdict v);

/// Informational window of signature densities sigma(K,p)/(g*p) over a
/// finite range of p.  The window brackets the true inf/sup densities from
/// the inside: window_min is an upper bound for the lower density and
/// window_max a lower bound for the upper density.
struct DensityEstimate {
  long N = 0;
  long p_max = 0;
  Rat window_min;
  Rat window_max;
  /// Minimum torus-knot density over the same window; when N == 11 this is
  /// replaced by the analytic floor (1 for g <= 5, 10/11 for g >= 6), which
  /// is valid for every p >= 11, not just the sampled range.
  Rat torus_lower_bound;
};

/// Hypothesis predicates behind the slope obstructions.  For positive
/// 2-bridge non-torus forms the structural ones hold automatically; the
/// numeric ones are asserted per knot.
struct Hypotheses {
  bool a2_gt_one = false;
  bool four_v3_positive = false;
  bool thin = true;
  bool not_l_space = true;
  bool tau_equals_genus = true;
};

/// Per-knot summary of every obstruction the engine evaluates.
struct ObstructionReport {
  std::string key;
  int g = 0;
  Int det;
  Int a2;
  Int a4;
  Int four_v3;
  Rat slope_lmo;
  Rat slope_hf;
  bool main_ineq = false;
  bool equality_violated = false;
  std::optional<DensityEstimate> density_window;
  Hypotheses hypotheses;
  Verdict verdict = Verdict::inconclusive;
};

/// Candidate surgery slope from the degree-two finite-type invariants:
/// (7*a2^2 - a2 - 10*a4) / (2 * 4v3).  Requires 4v3 != 0, which holds for
/// every positive form.
Rat slope_candidate_lmo(const ConwayForm& k);
Rat slope_candidate_lmo(const Int& a2, const Int& a4, const Int& four_v3);

/// Candidate surgery slope from Heegaard Floer homology: (det + 6g - 5)/4.
Rat slope_candidate_hf(const ConwayForm& k);
Rat slope_candidate_hf(const Int& det, int g);

/// Margin of the main inequality: (det + 6g - 5) minus the genus-dependent
/// threshold 176*a2/(10g) for g >= 6 and 16*a2/g for g <= 5.
Rat main_margin(const ConwayForm& k);
Rat main_margin(const Int& det, const Int& a2, int g);

/// Strict form of the main obstruction: margin > 0.  This is the operative
/// test used by verdicts.
bool main_obstruction(const ConwayForm& k);
bool main_obstruction(const Int& det, const Int& a2, int g);

/// Equality obstruction: true when the two candidate slopes disagree,
/// i.e. 2*(7*a2^2 - a2 - 10*a4)/4v3 != det + 6g - 5, compared exactly.
bool equality_obstruction(const ConwayForm& k);
bool equality_obstruction(const Int& a2, const Int& a4, const Int& four_v3,
                          const Int& det, int g);

/// Compatibility relation between the Casson-Walker and Casson-Gordon
/// sides: 12*(q+q')*a2 == 3*sigma(K,p), evaluated exactly.  qsum must be
/// nonzero.
bool cw_cg_relation(const ConwayForm& k, long p, long qsum,
                    const SignatureConfig& config = SignatureConfig{});

/// Sample signature densities sigma(K,p)/(g*p) for p in [N, p_max] along
/// with the matching torus-knot floor.  Informational only; never feeds a
/// verdict.
DensityEstimate signature_density(const ConwayForm& k, long N, long p_max,
                                  const SignatureConfig& config =
                                      SignatureConfig{});

/// Surgery slope pair realized by the known chirally cosmetic family on the
/// (2,k)-torus knot: (2k^2(2m+1)/(k(2m+1)+1), 2k^2(2m+1)/(k(2m+1)-1)),
/// both in lowest terms.  kparam must be odd and >= 3.
std::pair<Rat, Rat> known_ccs_slopes(long kparam, long m);

/// Full per-knot classification.  Density windows are expensive and are
/// left empty here; callers that want one attach it separately.
ObstructionReport verdict(const ConwayForm& k);

}  // namespace tb
