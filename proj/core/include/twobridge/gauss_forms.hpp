#pragma once
/**
 * @file gauss_forms.hpp
 * @brief Closed-form invariants: Gauss-diagram formulas for a2 and 4v3 and
 *        the per-family closed forms, used as fast paths and as independent
 *        oracles against the seifert/jones modules.
 */
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twobridge/conway.hpp"
#include "twobridge/exactalg.hpp"

namespace tb {

/// a2 = sum_{i=1..g} sum_{j=1..i} -b_i c_j.
Int a2_gauss(const ConwayForm& k);

/// Gauss-diagram formula for 4 v3. With B_i = b_i and C_j = -c_j:
///   4v3 = (1/2)( sum_{j<=i} B_i^2 C_j + sum_{j<=i} B_i C_j^2 )
///         + sum_{k<=j<i} B_i B_j C_k + sum_{k<j<=i} B_i C_j C_k,
/// a positive integer for positive forms.
Int four_v3_gauss(const ConwayForm& k);
Rat v3_gauss(const ConwayForm& k);

/// Value of the genus-2 criterion polynomial 4xyzw - 3yx - 3zw - 3xw + 2.
Int genus2_criterion_value(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t w);
/// The displayed criterion (value >= 0).
bool genus2_criterion(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t w);
/// Strict variant (value > 0); agrees with the operative main obstruction.
bool genus2_criterion_strict(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t w);

enum class FamilyId {
    bg_chain,          ///< C[2b_g,-2,2,-2,...,2,-2], params (b_g, g)
    genus4_two_param,  ///< C[2b_g,-2,...,2,-2c_1], params (b_g, -c_1, g)
    genus2_general,    ///< C[2x,-2y,2z,-2w], params (x, y, z, w)
    genus2_a,          ///< C[2x,-2,2,-2w], params (x, w)
    genus2_b,          ///< C[2x,-4,2,-2], params (x)
    genus3_y,          ///< C[2x,-2,4,-2,2,-2v], params (x, v)
    genus3_x,          ///< C[2x,-4,2,-2,2,-2v], params (x, v)
    genus3_final       ///< C[2x,-2,2,-2,2,-2v], params (x, v)
};

/**
 * Closed-form values of one family instance. `engine` carries the values
 * recomputed from the Conway form (authoritative); `printed` carries the
 * stated closed forms. Fields on the typo list may differ between the two;
 * any other disagreement is a hard error.
 */
struct FamilyValues {
    ConwayForm form;
    std::map<std::string, Int> engine;
    std::map<std::string, Int> printed;
    std::vector<std::string> typo_fields;
};

/// Evaluate one family at the given positive parameters (arity checked).
FamilyValues family_closed_form(FamilyId id, const std::vector<std::int64_t>& params);

}  // namespace tb
