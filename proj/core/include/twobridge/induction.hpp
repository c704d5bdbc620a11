#pragma once

#include "twobridge/conway.hpp"
#include "twobridge/exactalg.hpp"

namespace tb {

/// Effect of a single neighbor move on the determinant and a2, together
/// with the guaranteed lower bound on delta_det / delta_a2.
struct MoveDelta {
  int i = 0;
  MoveKind kind = MoveKind::b_plus;
  Int delta_det;
  Int delta_a2;
  Int bound;
};

/// Compute the deltas for the move (i, kind) and check the estimate
/// delta_det >= bound * delta_a2 with bound = 8(g-i)+4 for b_plus and
/// 8i-4 for c_minus.  A violation throws: it would contradict the
/// underlying estimate this engine certifies.
MoveDelta move_delta(const ConwayForm& k, int i, MoveKind kind);

/// Verify the auxiliary claims behind the estimate: with x_j, y_j the
/// differences of the fraction sequences of the moved and original forms,
///   - x_j = y_j = 0 for j < i,
///   - x_j = (-4 b_j c_j - 1) x_{j-1} - 2 b_j y_{j-1} and
///     y_j = -2 c_j x_{j-1} - y_{j-1} for j > i,
///   - for b_plus:  x_j - y_j >= 4(-c_1 - ... - c_i) for all j >= i,
///   - for c_minus: x_j >= (8i-4)(b_i + ... + b_j) for all j >= i.
/// Returns true when every claim holds.
bool claim_xy_check(const ConwayForm& k, int i, MoveKind kind);

/// Inductive step: given that the main obstruction holds for k, returns
/// whether the sufficient ratio condition delta_det/delta_a2 >= threshold
/// holds for the move (threshold 176/(10g) for g >= 6, 16/g for g <= 5).
/// When it does, the main obstruction for the neighbor is asserted.
bool induction_step(const ConwayForm& k, int i, MoveKind kind);

}  // namespace tb
