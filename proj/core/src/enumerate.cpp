#include "twobridge/enumerate.hpp"

#include <stdexcept>

namespace tb {
namespace {

/// Emit all compositions of m into n positive parts in ascending
/// lexicographic order, reusing one buffer.
void compositions(int m, int n, std::vector<std::int64_t>& buf, int pos,
                  const std::function<void(const std::vector<std::int64_t>&)>&
                      emit) {
  if (pos == n - 1) {
    buf[pos] = m;
    emit(buf);
    return;
  }
  const int remaining_slots = n - pos - 1;
  for (int v = 1; v <= m - remaining_slots; ++v) {
    buf[pos] = v;
    compositions(m - v, n, buf, pos + 1, emit);
  }
}

}  // namespace

void enumerate(const EnumerationSpec& spec,
               const std::function<void(const ConwayForm&)>& visit) {
  if (spec.max_complexity < 2) {
    throw std::invalid_argument("enumerate: max_complexity must be >= 2");
  }
  for (int m = 2; m <= spec.max_complexity; ++m) {
    for (int g = 1; 2 * g <= m; ++g) {
      if (spec.genus_range &&
          (g < spec.genus_range->first || g > spec.genus_range->second)) {
        continue;
      }
      std::vector<std::int64_t> buf(2 * g);
      compositions(m, 2 * g, buf, 0,
                   [&](const std::vector<std::int64_t>& t) {
                     std::vector<std::int64_t> b(g), c(g);
                     for (int j = 0; j < g; ++j) {
                       b[j] = t[2 * j];
                       c[j] = -t[2 * j + 1];
                     }
                     const ConwayForm k(b, c);
                     if (spec.dedup == Dedup::symmetry &&
                         k.canonical_key() != k.key()) {
                       return;
                     }
                     visit(k);
                   });
    }
  }
}

std::vector<ConwayForm> enumerate_all(const EnumerationSpec& spec) {
  std::vector<ConwayForm> out;
  enumerate(spec, [&](const ConwayForm& k) { out.push_back(k); });
  return out;
}

Int expected_count(int m, int g) {
  if (m < 2 || g < 1 || 2 * g > m) return Int(0);
  return binomial(m - 1, 2 * g - 1);
}

Int expected_count(int m) {
  if (m < 2) return Int(0);
  Int p = 1;
  return p << (m - 2);
}

}  // namespace tb
