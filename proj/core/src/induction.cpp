#include "twobridge/induction.hpp"

#include <stdexcept>
#include <vector>

#include "twobridge/gauss_forms.hpp"
#include "twobridge/obstruction.hpp"

namespace tb {

MoveDelta move_delta(const ConwayForm& k, int i, MoveKind kind) {
  const int g = k.genus();
  if (i < 1 || i > g) {
    throw std::invalid_argument("move_delta: index out of range");
  }
  const ConwayForm moved = k.neighbor(i, kind);
  MoveDelta d;
  d.i = i;
  d.kind = kind;
  d.delta_det = moved.determinant() - k.determinant();
  d.delta_a2 = a2_gauss(moved) - a2_gauss(k);
  d.bound = (kind == MoveKind::b_plus) ? Int(8 * (g - i) + 4) : Int(8 * i - 4);
  if (d.delta_a2 <= 0) {
    throw std::logic_error("move_delta: delta_a2 must be positive");
  }
  if (d.delta_det < d.bound * d.delta_a2) {
    throw std::logic_error(
        "move_delta: estimate delta_det >= bound * delta_a2 failed");
  }
  return d;
}

bool claim_xy_check(const ConwayForm& k, int i, MoveKind kind) {
  const int g = k.genus();
  if (i < 1 || i > g) {
    throw std::invalid_argument("claim_xy_check: index out of range");
  }
  const ConwayForm moved = k.neighbor(i, kind);
  const std::vector<Fraction> base = k.fraction_sequence();
  const std::vector<Fraction> mod = moved.fraction_sequence();
  std::vector<Int> x(g + 1), y(g + 1);
  for (int j = 0; j <= g; ++j) {
    x[j] = mod[j].d - base[j].d;
    y[j] = mod[j].p - base[j].p;
  }
  for (int j = 0; j < i; ++j) {
    if (x[j] != 0 || y[j] != 0) return false;
  }
  for (int j = i + 1; j <= g; ++j) {
    const Int bj(k.b(j));
    const Int cj(k.c(j));
    if (x[j] != (-4 * bj * cj - 1) * x[j - 1] - 2 * bj * y[j - 1]) {
      return false;
    }
    if (y[j] != -2 * cj * x[j - 1] - y[j - 1]) return false;
  }
  if (kind == MoveKind::b_plus) {
    Int sum_c = 0;
    for (int j = 1; j <= i; ++j) sum_c += -Int(k.c(j));
    const Int floor_val = 4 * sum_c;
    for (int j = i; j <= g; ++j) {
      if (x[j] - y[j] < floor_val) return false;
    }
  } else {
    Int sum_b = 0;
    for (int j = i; j <= g; ++j) {
      sum_b += Int(k.b(j));
      if (x[j] < Int(8 * i - 4) * sum_b) return false;
    }
  }
  return true;
}

bool induction_step(const ConwayForm& k, int i, MoveKind kind) {
  if (!main_obstruction(k)) {
    throw std::invalid_argument(
        "induction_step: main obstruction must hold for the base form");
  }
  const int g = k.genus();
  const MoveDelta d = move_delta(k, i, kind);
  const Rat ratio = make_rat(d.delta_det, d.delta_a2);
  const Rat threshold = (g >= 6) ? make_rat(176, 10 * g) : make_rat(16, g);
  const bool condition = ratio >= threshold;
  if (condition && !main_obstruction(k.neighbor(i, kind))) {
    throw std::logic_error(
        "induction_step: ratio condition held but the neighbor fails the "
        "main obstruction");
  }
  return condition;
}

}  // namespace tb
