#pragma once

#include <span>
#include <utility>
#include <vector>

namespace sandgroup {

struct Edge {
  int u;
  int v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Loop-free undirected multigraph. Edge ids are dense and follow insertion order.
class MultiGraph {
 public:
  explicit MultiGraph(int vertex_count = 0);
  MultiGraph(int vertex_count, std::span<const std::pair<int, int>> edges);

  int add_vertex();
  int add_edge(int u, int v);

  int vertex_count() const noexcept { return static_cast<int>(incident_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_.at(id); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& incident_edges(int v) const { return incident_.at(v); }

  int degree(int v) const { return static_cast<int>(incident_.at(v).size()); }
  /// Number of parallel edges between u and v.
  int multiplicity(int u, int v) const;
  int opposite(int edge_id, int v) const;

  int component_count() const;
  bool is_connected() const { return vertex_count() <= 1 || component_count() == 1; }

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

/// Simple connected acyclic graph. Validated on construction.
class Tree {
 public:
  /// Throws Error("not a tree") when the edges do not span a simple tree on n vertices.
  Tree(int vertex_count, std::span<const std::pair<int, int>> edges);
  explicit Tree(MultiGraph graph);

  const MultiGraph& graph() const noexcept { return graph_; }
  int vertex_count() const noexcept { return graph_.vertex_count(); }
  int degree(int v) const { return graph_.degree(v); }
  std::vector<int> neighbors(int v) const;
  bool is_leaf(int v) const { return graph_.degree(v) <= 1; }

 private:
  MultiGraph graph_;
};

/// Face lengths of an outerplane graph, indexed by weak-dual vertex.
using CycleLengths = std::vector<int>;

}  // namespace sandgroup
