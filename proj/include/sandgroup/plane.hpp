#pragma once

#include <optional>
#include <vector>

#include "sandgroup/graph.hpp"
#include "sandgroup/matrix.hpp"

namespace sandgroup {

/// Directed edge-end. Dart 2e runs from edge(e).u to edge(e).v, dart 2e+1 back.
using Dart = int;

inline constexpr int edge_of(Dart d) noexcept { return d >> 1; }
inline constexpr Dart reverse(Dart d) noexcept { return d ^ 1; }
inline constexpr Dart forward_dart(int edge_id) noexcept { return 2 * edge_id; }

struct Face {
  int id = 0;
  /// Darts in traversal order; the face lies to the left of each dart.
  std::vector<Dart> boundary;

  int length() const noexcept { return static_cast<int>(boundary.size()); }
};

/// Connected multigraph with a rotation system and a designated outer face.
///
/// rotation[v] lists the edge ids at v in counterclockwise order. Faces are
/// traced with next(d) = the dart leaving head(d) just before d's edge in the
/// rotation at head(d), so bounded faces come out counterclockwise. Face ids
/// follow the order of each face's smallest dart.
class PlaneGraph {
 public:
  /// Traces faces and checks V - E + F = 2. Without `outer`, the longest face
  /// (lowest id on ties) is designated.
  PlaneGraph(MultiGraph graph, std::vector<std::vector<int>> rotation, std::optional<int> outer = {});

  const MultiGraph& graph() const noexcept { return graph_; }
  const std::vector<std::vector<int>>& rotation() const noexcept { return rotation_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }
  int face_of(Dart d) const { return face_of_dart_.at(d); }
  int outer_face() const noexcept { return outer_; }
  void set_outer_face(int face_id);

  int tail(Dart d) const;
  int head(Dart d) const { return tail(reverse(d)); }
  Dart next_in_face(Dart d) const;

  /// Interior faces in increasing id order; weak-dual vertex i is interior_faces()[i].
  std::vector<int> interior_faces() const;
  bool has_bridge() const;

 private:
  MultiGraph graph_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> position_;  // dart -> index of its edge in rotation[tail]
  std::vector<Face> faces_;
  std::vector<int> face_of_dart_;
  int outer_ = 0;
};

std::vector<Face> trace_faces(const PlaneGraph& pg);

/// Dual vertex f is face f of pg, dual edge e crosses primal edge e and runs
/// from the face right of dart 2e to the face left of it.
struct DualGraph {
  PlaneGraph plane;
  std::vector<int> vertex_of_face;
};

DualGraph dual(const PlaneGraph& pg);

/// Dual without the outer-face vertex; vertex i stands for pg.interior_faces()[i].
MultiGraph weak_dual(const PlaneGraph& pg);

IntMatrix cycle_intersection_matrix(const PlaneGraph& pg);

/// Non-trivial biconnected components (two or more edges), each relabelled
/// onto 0..k-1 in increasing original vertex order. Bridges are dropped.
std::vector<MultiGraph> biconnected_blocks(const MultiGraph& g);

struct OuterplaneGraph {
  PlaneGraph plane;
  /// Face id of the polygon built for each tree vertex.
  std::vector<int> face_of_node;
};

/// Glues one polygon per tree vertex, sharing one side across every tree edge.
/// Throws Error("infeasible lengths") unless c_v >= max(2, deg(v)) everywhere.
OuterplaneGraph build_outerplane(const Tree& t, const CycleLengths& c);

struct SinkGraph {
  MultiGraph graph;
  int sink = 0;
};

/// The tree plus a sink q = n joined to v by c_v - deg(v) parallel edges.
SinkGraph build_G_Tc(const Tree& t, const CycleLengths& c);

}  // namespace sandgroup
