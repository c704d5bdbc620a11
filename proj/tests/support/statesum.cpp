#include "support/statesum.hpp"

#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace tb::testsupport {
namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

/// One crossing, stored as its 4 port ids in counterclockwise order starting
/// at an end of the over-strand.  With that normalization the A-smoothing
/// always joins {q0,q1} and {q2,q3}, the B-smoothing {q0,q3} and {q1,q2}.
struct Crossing {
  int q[4];
};

struct Diagram {
  std::vector<Crossing> crossings;
  std::vector<std::pair<int, int>> edges;  ///< strand segments between ports
  int nodes = 0;
};

/// Assemble the twist diagram: starting from the 0-tangle, per block
/// (innermost first) 2|c_i| twists on the two right endpoints, then 2 b_i
/// twists on the two bottom endpoints, finally the side-arc closure.  The
/// over-strand runs top-left to bottom-right in a c-twist and top-right to
/// bottom-left in a b-twist, which is the all-positive Conway diagram.
Diagram assemble(const ConwayForm& k) {
  Diagram d;
  auto new_node = [&]() { return d.nodes++; };
  const int v_nw = new_node(), v_ne = new_node();
  const int v_sw = new_node(), v_se = new_node();
  d.edges.emplace_back(v_nw, v_ne);
  d.edges.emplace_back(v_sw, v_se);
  int cur_nw = v_nw, cur_ne = v_ne, cur_sw = v_sw, cur_se = v_se;
  for (int i = 1; i <= k.genus(); ++i) {
    for (std::int64_t t = 0; t < -2 * k.c(i); ++t) {
      // Right twist; ports counterclockwise: L_top, L_bot, R_bot, R_top.
      const int lt = new_node(), lb = new_node();
      const int rb = new_node(), rt = new_node();
      d.edges.emplace_back(cur_ne, lt);
      d.edges.emplace_back(cur_se, lb);
      cur_ne = rt;
      cur_se = rb;
      d.crossings.push_back(Crossing{{lt, lb, rb, rt}});
    }
    for (std::int64_t t = 0; t < 2 * k.b(i); ++t) {
      // Bottom twist; ports counterclockwise: T_left, B_left, B_right,
      // T_right; over-strand enters at T_right.
      const int tl = new_node(), bl = new_node();
      const int br = new_node(), tr = new_node();
      d.edges.emplace_back(cur_sw, tl);
      d.edges.emplace_back(cur_se, tr);
      cur_sw = bl;
      cur_se = br;
      d.crossings.push_back(Crossing{{tr, tl, bl, br}});
    }
  }
  d.edges.emplace_back(cur_nw, cur_sw);
  d.edges.emplace_back(cur_ne, cur_se);
  return d;
}

}  // namespace

Laurent statesum_bracket(const ConwayForm& k) {
  const Diagram d = assemble(k);
  const int n = static_cast<int>(d.crossings.size());
  // Tally states by (A-count minus B-count, loop count); the polynomial
  // arithmetic then runs once per distinct pair.
  std::map<std::pair<long, int>, Int> tally;
  for (unsigned long long s = 0; s < (1ull << n); ++s) {
    UnionFind uf(d.nodes);
    for (const auto& [a, b] : d.edges) uf.unite(a, b);
    long exponent = 0;
    for (int i = 0; i < n; ++i) {
      const auto& q = d.crossings[i].q;
      const bool a_state = ((s >> i) & 1ull) == 0;
      exponent += a_state ? 1 : -1;
      if (a_state) {
        uf.unite(q[0], q[1]);
        uf.unite(q[2], q[3]);
      } else {
        uf.unite(q[0], q[3]);
        uf.unite(q[1], q[2]);
      }
    }
    int loops = 0;
    for (int v = 0; v < d.nodes; ++v)
      if (uf.find(v) == v) ++loops;
    tally[{exponent, loops}] += 1;
  }
  const Laurent delta = Laurent(Int(-1), 2) + Laurent(Int(-1), -2);
  Laurent bracket;
  for (const auto& [key, count] : tally) {
    bracket += delta.pow(static_cast<unsigned long>(key.second - 1))
                   .shifted(count, key.first);
  }
  return bracket;
}

}  // namespace tb::testsupport
