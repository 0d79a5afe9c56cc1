#pragma once

#include <cstdint>
#include <vector>

#include "sandgroup/graph.hpp"
#include "sandgroup/matrix.hpp"

namespace sandgroup {

/// Largest tree accepted by the 2-matching enumerators.
inline constexpr int two_matching_vertex_bound = 14;

/// Tree edges plus loops; a loop uses both incidences at its vertex.
struct TwoMatching {
  std::vector<int> tree_edges;
  std::vector<int> loops;

  int size() const noexcept { return static_cast<int>(tree_edges.size() + loops.size()); }
  friend bool operator==(const TwoMatching&, const TwoMatching&) = default;
};

/// All 2-matchings with exactly k items, ordered by (edge mask, loop mask).
std::vector<TwoMatching> enumerate_2matchings(const Tree& t, int k);

/// One 2-matching per inclusion-minimal loop set among those of size k,
/// ordered by loop-set size then lexicographically.
std::vector<TwoMatching> minimal_2matchings(const Tree& t, int k);

/// c on the diagonal, -1 on tree adjacencies.
IntMatrix loop_weight_matrix(const Tree& t, const CycleLengths& c);

/// |det| of loop_weight_matrix restricted to `loops`; the empty set gives 1.
Integer loop_set_determinant(const Tree& t, const CycleLengths& c, const std::vector<int>& loops);

struct DeltaSequence {
  /// deltas[k-1] is the gcd at size k, for k = 1..n.
  std::vector<Integer> deltas;
  /// Distinct determinants over the minimal loop sets at each size.
  std::vector<std::vector<Integer>> witnesses;
};

DeltaSequence delta_sequence(const Tree& t, const CycleLengths& c);

/// Invariant factors are the successive quotients of the delta sequence.
GroupStructure group_of_outerplane(const Tree& t, const CycleLengths& c);

}  // namespace sandgroup
