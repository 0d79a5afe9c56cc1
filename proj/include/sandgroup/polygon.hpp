#pragma once

#include <vector>

#include "sandgroup/matrix.hpp"
#include "sandgroup/plane.hpp"

namespace sandgroup {

/// Polygons with the given numbers of sides, stacked along a path.
struct PolygonChainSpec {
  std::vector<int> lengths;

  /// Throws unless non-empty with every length >= 2.
  void validate() const;
};

PolygonChainSpec ladder(int sides, int count);

/// Product-of-lengths recurrence, tau_n = k_n tau_{n-1} - tau_{n-2}.
Integer tau_polygon_chain(const PolygonChainSpec& spec);

/// Signed sum over matchings mu of the path on the polygons of
/// (-1)^|mu| times the product of lengths of unmatched polygons.
Integer tau_polygon_chain_matchings(const PolygonChainSpec& spec);

/// Alternating binomial sum for `count` copies of a `sides`-gon.
Integer tau_ladder_closed_form(int sides, int count);

enum class Attach { first, last };

struct PolygonFlowerSpec {
  int cycle_length = 3;
  std::vector<PolygonChainSpec> chains;
  std::vector<Attach> attach;

  /// Throws Error("contraction undefined") when an attachment polygon has fewer than 3 sides.
  void validate() const;
  const PolygonChainSpec& chain(std::size_t i) const { return chains.at(i); }
  int attach_length(std::size_t i) const;
};

/// The chain after contracting a free side of its attachment polygon.
PolygonChainSpec contract_attachment(const PolygonChainSpec& chain, Attach where);

Integer flower_tau(const PolygonFlowerSpec& spec);

/// Product of the chain spanning-tree counts.
Integer flower_chain_product(const PolygonFlowerSpec& spec);

/// gcd of all j-fold products of chain counts for j = 1..l-2. Computed from
/// both the recurrence and the matchings sum; throws if they disagree.
std::vector<Integer> flower_deltas(const PolygonFlowerSpec& spec);

GroupStructure flower_group(const PolygonFlowerSpec& spec);

/// Starlike tree: vertex 0 is the central cycle, each chain runs outward
/// starting from its attachment polygon.
struct FlowerLayout {
  Tree tree;
  CycleLengths lengths;
};

FlowerLayout flower_layout(const PolygonFlowerSpec& spec);

OuterplaneGraph build_flower_graph(const PolygonFlowerSpec& spec);

}  // namespace sandgroup
