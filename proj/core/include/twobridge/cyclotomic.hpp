#pragma once
/**
 * @file cyclotomic.hpp
 * @brief Cyclotomic polynomials and exact divisibility tests, used to decide
 *        whether a root of unity is a root of an Alexander polynomial.
 */
#include "twobridge/exactalg.hpp"

namespace tb {

/// d-th cyclotomic polynomial (memoized; d >= 1).
const Laurent& cyclotomic(unsigned long d);

/// True iff divisor divides p exactly in Z[x].
bool divides_exactly(const Laurent& divisor, const Laurent& p);

}  // namespace tb
