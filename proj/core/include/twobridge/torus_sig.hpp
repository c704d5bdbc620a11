#pragma once
/**
 * @file torus_sig.hpp
 * @brief Exact signatures of torus links T(q,n) via the classical recursion,
 *        with the parity constants and bound checks used downstream.
 */
#include "twobridge/exactalg.hpp"

namespace tb {

/// a(q) = 1 for odd q, 2 for even q.
int a_parity(long q);
/// b(q,n) = 1/2 when q odd and n even, else 0.
Rat b_parity(long q, long n);

/// Signature of the (q,n) torus link, recursion memoized on normalized q <= n:
/// sigma(T_{1,n}) = 0; sigma(T_{q,q}) = (q^2 - a(q))/2; q < n < 2q reflects
/// via q^2 - a(q) - sigma(T_{q,2q-n}); sigma(T_{q,2q}) = q^2 - 1; n > 2q
/// reduces through sigma(T_{q,n-2q}) + q^2 + a(q) - 2.
Int sigma_torus(long q, long n);

/// (q-1)n/2 <= sigma(T_{q,n}) <= q(n+1)/2 - a(q) - b(q,n), exact rationals.
bool check_bounds(long q, long n);

/// sigma(T_{2,2g+1}, p) computed as sigma_torus(2g+1, p).
Int total_sig_torus_2_odd(long g, long p);

}  // namespace tb
