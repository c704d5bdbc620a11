#pragma once
/**
 * @file seifert.hpp
 * @brief Seifert matrix of the plumbed surface, Conway/Alexander polynomials,
 *        a2/a4 coefficients, and Levine-Tristram / total p-signatures.
 */
#include <vector>

#include "twobridge/conway.hpp"
#include "twobridge/exactalg.hpp"

namespace tb {

/// 2g x 2g upper-bidiagonal Seifert matrix: diagonal (-c_1, b_1, ..., -c_g, b_g),
/// superdiagonal 1, all other entries 0.
struct SeifertMatrix {
    int n = 0;
    std::vector<std::vector<Int>> entries;

    Int at(int i, int j) const { return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
};

SeifertMatrix seifert_matrix(const ConwayForm& k);

/// Conway polynomial in z via the tridiagonal recurrence
/// D_0 = 1, D_1 = a_1 z, D_m = a_m z D_{m-1} + D_{m-2}.
Laurent conway_polynomial(const ConwayForm& k);

Int a2(const ConwayForm& k);
Int a4(const ConwayForm& k);

/// Independent oracle: det(u V - u^{-1} V^T) by generic fraction-free
/// (Bareiss) elimination over the Laurent ring, as a polynomial in u = t^{1/2}.
Laurent conway_polynomial_bareiss_u(const ConwayForm& k);

/// Alexander polynomial Delta(t) = t^g * nabla(z)|_{z^2 = t - 2 + t^{-1}},
/// an honest polynomial in t of degree 2g with Delta(1) = 1.
Laurent alexander_t(const ConwayForm& k);

/// |det(V + V^T)| via exact integer Bareiss elimination.
Int det_v_plus_vt(const ConwayForm& k);

/// Exact integer determinant of a general square matrix (Bareiss).
Int integer_determinant(std::vector<std::vector<Int>> m);

struct SignatureConfig {
    int start_bits = 256;
    int max_bits = 4096;
};

struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Levine-Tristram signature at omega = e^{2 pi i numer/denom}.
 *
 * Signature of H(omega) = (1-omega) V + (1-conj(omega)) V^T with zero
 * eigenvalues dropped; 0 at omega = 1 by convention. Signs are certified:
 * whether omega is a root of the Alexander polynomial is decided exactly
 * (cyclotomic divisibility), pivot magnitudes must clear a tolerance
 * 2^{-64}*||H||, and on doubt the working precision escalates up to
 * config.max_bits before a precision_error is raised.
 */
int lt_signature(const ConwayForm& k, long numer, long denom, const SignatureConfig& config = {});

/// sigma(K,p): sum of lt_signature over all p-th roots of unity.
int total_signature(const ConwayForm& k, long p, const SignatureConfig& config = {});

/// lt_signature at omega = -1; equals 2g for positive forms.
int ordinary_signature(const ConwayForm& k, const SignatureConfig& config = {});

}  // namespace tb
