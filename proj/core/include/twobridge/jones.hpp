#pragma once
/**
 * @file jones.hpp
 * @brief Kauffman bracket of the Conway diagram by 2-state rational-tangle
 *        transfer, Jones polynomial, and the degree-3 invariant v3.
 *
 * Bracket-side polynomials live in the variable A; since A = t^{-1/4}, an
 * A-exponent is a t^{1/4}-scale exponent. Conversion to t divides by -4 and
 * requires every exponent to be divisible by 4.
 */
#include "twobridge/conway.hpp"
#include "twobridge/exactalg.hpp"

namespace tb {

/// Bracket coefficients over the {0-tangle, infinity-tangle} basis.
struct BracketState {
    Laurent f;  ///< 0-tangle coefficient
    Laurent g;  ///< infinity-tangle coefficient
};

/// <D> for the diagram C[2b_g, ..., 2c_1], exact Laurent polynomial in A.
Laurent kauffman_bracket(const ConwayForm& k);

/// Writhe of the all-positive diagram: 2 sum b_i - 2 sum c_i.
std::int64_t writhe(const ConwayForm& k);

/// V_K(t) = (-A^3)^{-w} <D> with A = t^{-1/4}; throws std::logic_error if the
/// A-exponents fail the mod-4 divisibility gate.
Laurent jones_polynomial(const ConwayForm& k);

/// v3 = -(1/144) V'''(1) - (1/48) V''(1), exact rational.
Rat v3_from_jones(const ConwayForm& k);

/// 4 v3 as an exact integer.
Int four_v3_from_jones(const ConwayForm& k);

}  // namespace tb
