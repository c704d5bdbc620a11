#pragma once
/**
 * @file exactalg.hpp
 * @brief Exact arithmetic kernel: arbitrary-precision integers, rationals and
 *        sparse Laurent polynomials with integer coefficients.
 *
 * All comparisons and ring operations here are exact; no floating point.
 */
#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tb {

using Int = mpz_class;
using Rat = mpq_class;

/// Reduced fraction num/den with positive denominator.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int pow_int(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/**
 * Sparse Laurent polynomial over Z in one formal variable.
 * Exponents may be negative; zero coefficients are never stored.
 */
class Laurent {
  public:
    Laurent() = default;
    explicit Laurent(const Int& constant) {
        if (constant != 0) c_[0] = constant;
    }
    Laurent(const Int& coeff, long exponent) {
        if (coeff != 0) c_[exponent] = coeff;
    }

    static Laurent monomial(const Int& coeff, long exponent) { return Laurent(coeff, exponent); }

    bool is_zero() const { return c_.empty(); }
    long min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
    long max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }
    std::size_t term_count() const { return c_.size(); }

    Int coeff(long exponent) const {
        auto it = c_.find(exponent);
        return it == c_.end() ? Int(0) : it->second;
    }
    void set_coeff(long exponent, const Int& v) {
        if (v == 0)
            c_.erase(exponent);
        else
            c_[exponent] = v;
    }

    const std::map<long, Int>& terms() const { return c_; }

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator-() const;
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    bool operator==(const Laurent& o) const { return c_ == o.c_; }
    bool operator!=(const Laurent& o) const { return c_ != o.c_; }

    /// Multiply by coeff * x^exponent.
    Laurent shifted(const Int& coeff, long exponent) const;
    Laurent pow(unsigned long e) const;

    /// Formal derivative: n*x^(n-1) termwise.
    Laurent derivative() const;

    Int eval_at_one() const;
    Int eval_at_minus_one() const;
    /// Evaluate a polynomial supported on even exponents as a polynomial in
    /// x^2 at the given value (used for nabla(z) with z^2 = -4).
    Int eval_even_square(const Int& square_value) const;

    /// Substitute x -> q (polynomial composition; requires min_exp() >= 0
    /// unless q is invertible as a monomial).
    Laurent substitute(const Laurent& q) const;

    /**
     * Exact division: returns quotient if divisor divides *this exactly in
     * the Laurent ring, otherwise throws std::domain_error. Used by the
     * fraction-free determinant and cyclotomic machinery.
     */
    Laurent divide_exact(const Laurent& divisor) const;

    /// Render as "c*x^e + ..." with exponents ascending; "0" when empty.
    std::string to_string(const std::string& var) const;

  private:
    std::map<long, Int> c_;
};

}  // namespace tb
