#include "twobridge/obstruction.hpp"

#include <stdexcept>

#include "twobridge/gauss_forms.hpp"
#include "twobridge/torus_sig.hpp"

namespace tb {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::excluded_torus_2k:
      return "excluded_torus_2k";
    case Verdict::no_ccs_main:
      return "no_ccs_main";
    case Verdict::no_ccs_equality:
      return "no_ccs_equality";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  throw std::logic_error("verdict_name: unknown verdict");
}

Rat slope_candidate_lmo(const Int& a2, const Int& a4, const Int& four_v3) {
  if (four_v3 == 0) {
    throw std::domain_error(
        "slope_candidate_lmo: zero denominator (4v3 = 0)");
  }
  const Int num = 7 * a2 * a2 - a2 - 10 * a4;
  return make_rat(num, 2 * four_v3);
}

Rat slope_candidate_lmo(const ConwayForm& k) {
  return slope_candidate_lmo(a2_gauss(k), a4(k), four_v3_gauss(k));
}

Rat slope_candidate_hf(const Int& det, int g) {
  return make_rat(det + 6 * g - 5, 4);
}

Rat slope_candidate_hf(const ConwayForm& k) {
  return slope_candidate_hf(k.determinant(), k.genus());
}

Rat main_margin(const Int& det, const Int& a2, int g) {
  const Rat lhs(det + 6 * g - 5);
  const Rat threshold = (g >= 6) ? make_rat(176 * a2, 10 * g)
                                 : make_rat(16 * a2, g);
  return lhs - threshold;
}

Rat main_margin(const ConwayForm& k) {
  return main_margin(k.determinant(), a2_gauss(k), k.genus());
}

bool main_obstruction(const Int& det, const Int& a2, int g) {
  return main_margin(det, a2, g) > 0;
}

bool main_obstruction(const ConwayForm& k) {
  return main_margin(k) > 0;
}

bool equality_obstruction(const Int& a2, const Int& a4, const Int& four_v3,
                          const Int& det, int g) {
  const Rat lhs = make_rat(2 * (7 * a2 * a2 - a2 - 10 * a4), four_v3);
  const Rat rhs(det + 6 * g - 5);
  return lhs != rhs;
}

bool equality_obstruction(const ConwayForm& k) {
  return equality_obstruction(a2_gauss(k), a4(k), four_v3_gauss(k),
                              k.determinant(), k.genus());
}

bool cw_cg_relation(const ConwayForm& k, long p, long qsum,
                    const SignatureConfig& config) {
  if (p < 2) {
    throw std::invalid_argument("cw_cg_relation: p must be >= 2");
  }
  if (qsum == 0) {
    throw std::invalid_argument("cw_cg_relation: q + q' must be nonzero");
  }
  const Int lhs = Int(12) * qsum * a2_gauss(k);
  const Int rhs = Int(3) * total_signature(k, p, config);
  return lhs == rhs;
}

DensityEstimate signature_density(const ConwayForm& k, long N, long p_max,
                                  const SignatureConfig& config) {
  if (N < 2 || p_max < N) {
    throw std::invalid_argument(
        "signature_density: need 2 <= N <= p_max");
  }
  const int g = k.genus();
  DensityEstimate est;
  est.N = N;
  est.p_max = p_max;
  bool first = true;
  bool torus_first = true;
  Rat torus_min;
  for (long p = N; p <= p_max; ++p) {
    const Rat density = make_rat(total_signature(k, p, config), Int(g) * p);
    if (first || density < est.window_min) est.window_min = density;
    if (first || density > est.window_max) est.window_max = density;
    first = false;
    const Rat torus_density =
        make_rat(total_sig_torus_2_odd(g, p), Int(g) * p);
    if (torus_first || torus_density < torus_min) torus_min = torus_density;
    torus_first = false;
  }
  if (N == 11) {
    // Analytic floor valid for every p >= 11, stronger than the sampled
    // minimum as a statement even when numerically smaller.
    const Rat floor = (g >= 6) ? make_rat(10, 11) : Rat(1);
    if (torus_min < floor) {
      throw std::logic_error(
          "signature_density: sampled torus density fell below the "
          "analytic floor");
    }
    est.torus_lower_bound = floor;
  } else {
    est.torus_lower_bound = torus_min;
  }
  return est;
}

std::pair<Rat, Rat> known_ccs_slopes(long kparam, long m) {
  if (kparam < 3 || kparam % 2 == 0) {
    throw std::invalid_argument(
        "known_ccs_slopes: k must be an odd integer >= 3");
  }
  const Int kk(kparam);
  const Int num = 2 * kk * kk * (2 * m + 1);
  const Int d1 = kk * (2 * m + 1) + 1;
  const Int d2 = kk * (2 * m + 1) - 1;
  return {make_rat(num, d1), make_rat(num, d2)};
}

ObstructionReport verdict(const ConwayForm& k) {
  ObstructionReport r;
  r.key = k.key();
  r.g = k.genus();
  r.det = k.determinant();
  r.a2 = a2_gauss(k);
  r.a4 = a4(k);
  r.four_v3 = four_v3_gauss(k);
  r.slope_lmo = slope_candidate_lmo(r.a2, r.a4, r.four_v3);
  r.slope_hf = slope_candidate_hf(r.det, r.g);
  r.main_ineq = main_obstruction(r.det, r.a2, r.g);
  r.equality_violated =
      equality_obstruction(r.a2, r.a4, r.four_v3, r.det, r.g);
  r.hypotheses.a2_gt_one = r.a2 > 1;
  r.hypotheses.four_v3_positive = r.four_v3 > 0;
  if (k.is_torus_2k()) {
    r.verdict = Verdict::excluded_torus_2k;
    return r;
  }
  if (!r.hypotheses.a2_gt_one || !r.hypotheses.four_v3_positive) {
    throw std::logic_error(
        "verdict: hypothesis check failed (expected a2 > 1 and 4v3 > 0 "
        "for a non-torus positive form)");
  }
  if (r.main_ineq) {
    r.verdict = Verdict::no_ccs_main;
  } else if (r.equality_violated) {
    r.verdict = Verdict::no_ccs_equality;
  } else {
    r.verdict = Verdict::inconclusive;
  }
  return r;
}

}  // namespace tb
