#include <mpfr.h>

#include <numeric>
#include <utility>
#include <vector>

#include "twobridge/cyclotomic.hpp"
#include "twobridge/seifert.hpp"

namespace tb {

namespace {

/// Minimal RAII wrapper around mpfr_t with explicit precision.
class Real {
  public:
    explicit Real(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(Real o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    void set_int(const Int& z) { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
    void set_si(long x) { mpfr_set_si(v_, x, MPFR_RNDN); }

    int sign() const { return mpfr_sgn(v_); }
    bool abs_greater(const Real& o) const { return mpfr_cmpabs(v_, o.v_) > 0; }
    bool abs_geq(const Real& o) const { return mpfr_cmpabs(v_, o.v_) >= 0; }

  private:
    mpfr_t v_;
};

Real add(const Real& a, const Real& b, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}
Real sub(const Real& a, const Real& b, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}
Real mul(const Real& a, const Real& b, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}
Real div(const Real& a, const Real& b, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}
Real abs(const Real& a, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_abs(r.get(), a.get(), MPFR_RNDN);
    return r;
}

struct Inertia {
    int positive = 0;
    int negative = 0;
    int tiny = 0;
};

/**
 * Inertia of a real symmetric matrix by LDL^T with Bunch-Kaufman partial
 * pivoting; pivots with magnitude <= tau are counted as tiny instead of
 * signed. 2x2 pivot blocks with |det| <= tau^2 are likewise tiny.
 */
Inertia symmetric_inertia(std::vector<std::vector<Real>>& m, const Real& tau, mpfr_prec_t prec) {
    const std::size_t n = m.size();
    Inertia out;
    Real alpha(prec);  // (1 + sqrt(17)) / 8
    {
        Real seventeen(prec);
        seventeen.set_si(17);
        mpfr_sqrt(alpha.get(), seventeen.get(), MPFR_RNDN);
        mpfr_add_si(alpha.get(), alpha.get(), 1, MPFR_RNDN);
        mpfr_div_si(alpha.get(), alpha.get(), 8, MPFR_RNDN);
    }
    Real tau2 = mul(tau, tau, prec);

    auto swap_sym = [&](std::size_t p, std::size_t q) {
        if (p == q) return;
        std::swap(m[p], m[q]);
        for (std::size_t i = 0; i < n; ++i) std::swap(m[i][p], m[i][q]);
    };
    auto count_1x1 = [&](const Real& piv) {
        if (!piv.abs_greater(tau))
            ++out.tiny;
        else if (piv.sign() > 0)
            ++out.positive;
        else
            ++out.negative;
    };

    std::size_t k = 0;
    while (k < n) {
        bool two_by_two = false;
        if (k + 1 < n) {
            std::size_t r = k + 1;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m[i][k].abs_greater(m[r][k])) r = i;
            const Real colmax = abs(m[r][k], prec);
            const Real absakk = abs(m[k][k], prec);
            if (colmax.sign() != 0 && !absakk.abs_geq(mul(alpha, colmax, prec))) {
                Real rowmax(prec);
                for (std::size_t i = k; i < n; ++i) {
                    if (i == r) continue;
                    if (m[i][r].abs_greater(rowmax)) rowmax = abs(m[i][r], prec);
                }
                if (!mul(absakk, rowmax, prec).abs_geq(mul(alpha, mul(colmax, colmax, prec), prec))) {
                    if (abs(m[r][r], prec).abs_geq(mul(alpha, rowmax, prec))) {
                        swap_sym(k, r);
                    } else {
                        swap_sym(k + 1, r);
                        two_by_two = true;
                    }
                }
            }
        }
        if (!two_by_two) {
            const Real piv = m[k][k];
            count_1x1(piv);
            if (piv.abs_greater(tau)) {
                for (std::size_t i = k + 1; i < n; ++i) {
                    const Real mi = div(m[i][k], piv, prec);
                    for (std::size_t j = k + 1; j < n; ++j)
                        m[i][j] = sub(m[i][j], mul(mi, m[k][j], prec), prec);
                }
            } else {
                // tiny pivot: certified-zero row/column once the exact side
                // has confirmed singularity; nothing to eliminate with
                for (std::size_t i = k + 1; i < n; ++i) {
                    if (m[i][k].abs_greater(tau))
                        throw precision_error("tiny pivot with non-tiny column");
                }
            }
            ++k;
        } else {
            const Real a = m[k][k];
            const Real b = m[k + 1][k];
            const Real c = m[k + 1][k + 1];
            const Real det = sub(mul(a, c, prec), mul(b, b, prec), prec);
            if (!det.abs_greater(tau2)) {
                out.tiny += 2;
            } else if (det.sign() < 0) {
                ++out.positive;
                ++out.negative;
            } else if (add(a, c, prec).sign() > 0) {
                out.positive += 2;
            } else {
                out.negative += 2;
            }
            if (det.abs_greater(tau2)) {
                for (std::size_t i = k + 2; i < n; ++i) {
                    const Real x = m[i][k];
                    const Real y = m[i][k + 1];
                    const Real m1 = div(sub(mul(x, c, prec), mul(y, b, prec), prec), det, prec);
                    const Real m2 = div(sub(mul(y, a, prec), mul(x, b, prec), prec), det, prec);
                    for (std::size_t j = k + 2; j < n; ++j) {
                        Real upd = add(mul(m1, m[k][j], prec), mul(m2, m[k + 1][j], prec), prec);
                        m[i][j] = sub(m[i][j], upd, prec);
                    }
                }
            } else {
                for (std::size_t i = k + 2; i < n; ++i)
                    if (m[i][k].abs_greater(tau) || m[i][k + 1].abs_greater(tau))
                        throw precision_error("tiny 2x2 pivot with non-tiny columns");
            }
            k += 2;
        }
    }
    return out;
}

/// One certified attempt at a fixed precision; throws precision_error on doubt.
int lt_signature_attempt(const SeifertMatrix& v, long numer, long denom, bool exact_singular,
                         mpfr_prec_t prec) {
    const int n = v.n;
    const std::size_t nn = static_cast<std::size_t>(n);

    // omega = cos(theta) + i sin(theta), theta = 2 pi numer / denom
    Real theta(prec);
    mpfr_const_pi(theta.get(), MPFR_RNDN);
    mpfr_mul_si(theta.get(), theta.get(), 2 * numer, MPFR_RNDN);
    mpfr_div_si(theta.get(), theta.get(), denom, MPFR_RNDN);
    Real cosv(prec), sinv(prec);
    mpfr_cos(cosv.get(), theta.get(), MPFR_RNDN);
    mpfr_sin(sinv.get(), theta.get(), MPFR_RNDN);
    Real one_minus_cos(prec);
    mpfr_si_sub(one_minus_cos.get(), 1, cosv.get(), MPFR_RNDN);

    // H = A + iB with A = (1-cos)(V+V^T), B = sin (V^T-V); embed as
    // M = [[A, -B], [B, A]], a real symmetric matrix doubling each eigenvalue.
    const std::size_t m2 = 2 * nn;
    std::vector<std::vector<Real>> m(m2, std::vector<Real>(m2, Real(prec)));
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j) {
            Real sym(prec), skew(prec);
            sym.set_int(v.at(static_cast<int>(i), static_cast<int>(j)) +
                        v.at(static_cast<int>(j), static_cast<int>(i)));
            skew.set_int(v.at(static_cast<int>(j), static_cast<int>(i)) -
                         v.at(static_cast<int>(i), static_cast<int>(j)));
            Real a = mul(one_minus_cos, sym, prec);
            Real b = mul(sinv, skew, prec);
            m[i][j] = a;
            m[nn + i][nn + j] = std::move(a);
            Real negb(prec);
            mpfr_neg(negb.get(), b.get(), MPFR_RNDN);
            m[i][nn + j] = std::move(negb);
            m[nn + i][j] = std::move(b);
        }

    // tau = 2^{-64} * ||M||_inf
    Real norm(prec);
    for (std::size_t i = 0; i < m2; ++i) {
        Real row(prec);
        for (std::size_t j = 0; j < m2; ++j) {
            Real t = abs(m[i][j], prec);
            mpfr_add(row.get(), row.get(), t.get(), MPFR_RNDN);
        }
        if (row.abs_greater(norm)) norm = std::move(row);
    }
    Real tau(prec);
    mpfr_mul_2si(tau.get(), norm.get(), -64, MPFR_RNDN);
    if (tau.sign() == 0) tau.set_si(0);  // zero matrix: all pivots tiny

    const Inertia in = symmetric_inertia(m, tau, prec);
    if (in.positive + in.negative + in.tiny != static_cast<int>(m2))
        throw precision_error("inertia count mismatch");
    if (in.tiny % 2 != 0 || (in.positive - in.negative) % 2 != 0)
        throw precision_error("real embedding must double every eigenvalue");
    if (!exact_singular && in.tiny != 0)
        throw precision_error("sub-tolerance pivot at a certified-nonsingular point");
    if (exact_singular && in.tiny == 0)
        throw precision_error("certified-singular point produced no zero pivot");
    return (in.positive - in.negative) / 2;
}

}  // namespace

int lt_signature(const ConwayForm& k, long numer, long denom, const SignatureConfig& config) {
    if (denom <= 0) throw std::domain_error("lt_signature: denominator must be positive");
    numer %= denom;
    if (numer < 0) numer += denom;
    if (numer == 0) return 0;  // omega = 1: zero form by convention
    const long g = std::gcd(numer, denom);
    numer /= g;
    denom /= g;

    // Exact decision: omega (a primitive denom-th root) is a root of Delta
    // iff the denom-th cyclotomic polynomial divides Delta in Z[t].
    const bool exact_singular = divides_exactly(cyclotomic(static_cast<unsigned long>(denom)),
                                                alexander_t(k));
    const SeifertMatrix v = seifert_matrix(k);
    for (int bits = config.start_bits; bits <= config.max_bits; bits *= 2) {
        try {
            return lt_signature_attempt(v, numer, denom, exact_singular, bits);
        } catch (const precision_error&) {
            if (2 * bits > config.max_bits) throw;
        }
    }
    throw precision_error("lt_signature: escalation exhausted");
}

int total_signature(const ConwayForm& k, long p, const SignatureConfig& config) {
    if (p < 2) throw std::domain_error("total_signature: p must be >= 2");
    int total = 0;
    for (long j = 0; j < p; ++j) total += lt_signature(k, j, p, config);
    return total;
}

int ordinary_signature(const ConwayForm& k, const SignatureConfig& config) {
    return lt_signature(k, 1, 2, config);
}

}  // namespace tb
