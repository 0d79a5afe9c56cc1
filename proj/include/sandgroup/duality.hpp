#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sandgroup/graph.hpp"
#include "sandgroup/matrix.hpp"
#include "sandgroup/plane.hpp"
#include "sandgroup/sandpile.hpp"

namespace sandgroup {

struct Arc {
  int tail;
  int head;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// One arc per edge id.
using Orientation = std::vector<Arc>;

/// Every edge directed from its stored u to its stored v.
Orientation stored_orientation(const MultiGraph& g);

/// Vertices by edges; -1 at the tail and +1 at the head of each column.
IntMatrix incidence_matrix(const MultiGraph& g, const Orientation& o);

/// Orients each dual edge from the face on the right of its primal arc to the face on the left.
Orientation right_left_orientation(const PlaneGraph& pg, const Orientation& o);

/// Integer f with boundary * f = d, supported on a breadth-first spanning
/// forest (lowest edge id first). Throws Error("infeasible") when d is not
/// in the image.
std::vector<Integer> solve_flow(const IntMatrix& boundary, std::span<const Integer> d, int root = 0);

struct TransferResult {
  /// Flow on the primal edges; reused edge by edge on the dual.
  std::vector<Integer> flow;
  /// Dual boundary of the flow, over all faces, sink included.
  std::vector<Integer> dual_boundary;
  /// Dual class vector on the non-sink faces.
  std::vector<Integer> dual_class;
  int dual_sink = 0;
  Representative recurrent;
};

/// Moves configuration d on (pg, sink) to the dual with the outer face as sink.
/// Edges are oriented as stored unless `o` is given.
TransferResult transfer_config(const PlaneGraph& pg, int sink, std::span<const std::int64_t> d,
                               const std::optional<Orientation>& o = {});

}  // namespace sandgroup
