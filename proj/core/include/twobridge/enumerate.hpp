#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "twobridge/conway.hpp"
#include "twobridge/exactalg.hpp"

namespace tb {

enum class Dedup { none, symmetry };

/// Parameters of an enumeration run over positive 2-bridge forms, bounded
/// by the complexity s(K) = sum(b_i - c_i) (half the diagram crossings).
struct EnumerationSpec {
  int max_complexity = 2;
  std::optional<std::pair<int, int>> genus_range;
  Dedup dedup = Dedup::none;
};

/// Visit every form with 2 <= s(K) <= max_complexity exactly once, in
/// deterministic order: ascending s, then ascending genus, then
/// lexicographic on the tuple (b_1, -c_1, b_2, -c_2, ...) with index 1
/// innermost.  With dedup == symmetry, exactly one representative of each
/// mirror pair is visited (the lexicographically canonical one).
void enumerate(const EnumerationSpec& spec,
               const std::function<void(const ConwayForm&)>& visit);

/// Materialized variant of enumerate().
std::vector<ConwayForm> enumerate_all(const EnumerationSpec& spec);

/// Number of forms with s(K) == m and genus g: binomial(m-1, 2g-1).
Int expected_count(int m, int g);

/// Number of forms with s(K) == m over all genera: 2^(m-2) for m >= 2.
Int expected_count(int m);

}  // namespace tb
