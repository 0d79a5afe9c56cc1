#include "sandgroup/outerplanar.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <string>

#include "sandgroup/error.hpp"

namespace sandgroup {

namespace {

using Mask = std::uint32_t;

void check_size(const Tree& t) {
  if (t.vertex_count() > two_matching_vertex_bound)
    throw Error(ErrorKind::bound_exceeded, "enumeration bound",
                std::to_string(t.vertex_count()) + " vertices exceeds " + std::to_string(two_matching_vertex_bound));
}

void check_lengths(const Tree& t, const CycleLengths& c) {
  if (static_cast<int>(c.size()) != t.vertex_count())
    throw Error(ErrorKind::invalid_input, "size mismatch",
                std::to_string(c.size()) + " lengths for " + std::to_string(t.vertex_count()) + " vertices");
  for (int v = 0; v < t.vertex_count(); ++v)
    if (c[v] < std::max(2, t.degree(v)))
      throw Error(ErrorKind::infeasible, "infeasible lengths",
                  "vertex " + std::to_string(v) + " has length " + std::to_string(c[v]));
}

/// Calls visit(edge_mask, loop_mask, size) for every 2-matching, the empty one included.
void walk_2matchings(const Tree& t, const std::function<void(Mask, Mask, int)>& visit) {
  const auto& g = t.graph();
  const int m = g.edge_count();
  const int n = g.vertex_count();
  std::vector<int> used(n, 0);
  std::function<void(int, Mask, Mask, int)> step = [&](int item, Mask edges, Mask loops, int size) {
    if (item == m + n) {
      visit(edges, loops, size);
      return;
    }
    step(item + 1, edges, loops, size);
    if (item < m) {
      const Edge& e = g.edge(item);
      if (used[e.u] < 2 && used[e.v] < 2) {
        ++used[e.u], ++used[e.v];
        step(item + 1, edges | (Mask{1} << item), loops, size + 1);
        --used[e.u], --used[e.v];
      }
    } else {
      const int v = item - m;
      if (used[v] == 0) {
        used[v] = 2;
        step(item + 1, edges, loops | (Mask{1} << v), size + 1);
        used[v] = 0;
      }
    }
  };
  step(0, 0, 0, 0);
}

std::vector<int> bits_of(Mask mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

bool loop_order(Mask a, Mask b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  return bits_of(a) < bits_of(b);
}

/// For each size 0..n, the inclusion-minimal loop masks with their smallest edge mask.
std::vector<std::vector<std::pair<Mask, Mask>>> minimal_by_size(const Tree& t) {
  const int n = t.vertex_count();
  std::vector<std::map<Mask, Mask>> achieved(n + 1);
  walk_2matchings(t, [&](Mask edges, Mask loops, int size) {
    auto [it, fresh] = achieved[size].try_emplace(loops, edges);
    if (!fresh) it->second = std::min(it->second, edges);
  });
  std::vector<std::vector<std::pair<Mask, Mask>>> out(n + 1);
  for (int k = 0; k <= n; ++k) {
    std::vector<Mask> masks;
    for (auto& [loops, edges] : achieved[k]) masks.push_back(loops);
    std::sort(masks.begin(), masks.end(), loop_order);
    std::vector<Mask> minimal;
    for (Mask s : masks) {
      const bool covered = std::any_of(minimal.begin(), minimal.end(), [s](Mask r) { return (r & s) == r; });
      if (!covered) minimal.push_back(s);
    }
    for (Mask s : minimal) out[k].emplace_back(s, achieved[k][s]);
  }
  return out;
}

TwoMatching to_matching(Mask edges, Mask loops) { return TwoMatching{bits_of(edges), bits_of(loops)}; }

}  // namespace

std::vector<TwoMatching> enumerate_2matchings(const Tree& t, int k) {
  check_size(t);
  std::vector<std::pair<Mask, Mask>> found;
  walk_2matchings(t, [&](Mask edges, Mask loops, int size) {
    if (size == k) found.emplace_back(edges, loops);
  });
  std::sort(found.begin(), found.end());
  std::vector<TwoMatching> out;
  for (auto [edges, loops] : found) out.push_back(to_matching(edges, loops));
  return out;
}

std::vector<TwoMatching> minimal_2matchings(const Tree& t, int k) {
  check_size(t);
  if (k < 0 || k > t.vertex_count()) return {};
  const auto minimal = minimal_by_size(t);
  std::vector<TwoMatching> out;
  for (auto [loops, edges] : minimal[k]) out.push_back(to_matching(edges, loops));
  return out;
}

IntMatrix loop_weight_matrix(const Tree& t, const CycleLengths& c) {
  check_lengths(t, c);
  const auto n = static_cast<std::size_t>(t.vertex_count());
  IntMatrix a(n, n);
  for (std::size_t v = 0; v < n; ++v) a(v, v) = c[v];
  for (const Edge& e : t.graph().edges()) {
    a(e.u, e.v) = -1;
    a(e.v, e.u) = -1;
  }
  return a;
}

Integer loop_set_determinant(const Tree& t, const CycleLengths& c, const std::vector<int>& loops) {
  const auto a = loop_weight_matrix(t, c);
  std::vector<std::size_t> ids(loops.begin(), loops.end());
  return abs_of(determinant(a.submatrix(ids, ids)));
}

DeltaSequence delta_sequence(const Tree& t, const CycleLengths& c) {
  check_size(t);
  check_lengths(t, c);
  const int n = t.vertex_count();
  const auto a = loop_weight_matrix(t, c);
  const auto minimal = minimal_by_size(t);
  DeltaSequence out;
  for (int k = 1; k <= n; ++k) {
    std::vector<Integer> values;
    for (auto [loops, edges] : minimal[k]) {
      const auto bits = bits_of(loops);
      std::vector<std::size_t> ids(bits.begin(), bits.end());
      Integer d = abs_of(determinant(a.submatrix(ids, ids)));
      if (std::find(values.begin(), values.end(), d) == values.end()) values.push_back(std::move(d));
    }
    out.deltas.push_back(gcd_of(values));
    out.witnesses.push_back(std::move(values));
  }
  return out;
}

GroupStructure group_of_outerplane(const Tree& t, const CycleLengths& c) {
  const auto seq = delta_sequence(t, c);
  std::vector<Integer> factors;
  Integer previous = 1;
  for (const auto& d : seq.deltas) {
    if (d == 0 || d % previous != 0)
      throw Error(ErrorKind::infeasible, "broken divisibility", "delta sequence is not a divisor chain");
    factors.push_back(d / previous);
    previous = d;
  }
  return GroupStructure::from_cyclic_orders(factors);
}

}  // namespace sandgroup
