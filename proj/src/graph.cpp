#include "sandgroup/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sandgroup/error.hpp"

namespace sandgroup {

MultiGraph::MultiGraph(int vertex_count) {
  if (vertex_count < 0) throw Error(ErrorKind::invalid_input, "negative vertex count");
  incident_.resize(vertex_count);
}

MultiGraph::MultiGraph(int vertex_count, std::span<const std::pair<int, int>> edges) : MultiGraph(vertex_count) {
  for (auto [u, v] : edges) add_edge(u, v);
}

int MultiGraph::add_vertex() {
  incident_.emplace_back();
  return vertex_count() - 1;
}

int MultiGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw Error(ErrorKind::invalid_input, "vertex out of range", std::to_string(u) + "-" + std::to_string(v));
  if (u == v) throw Error(ErrorKind::invalid_input, "loop", "at vertex " + std::to_string(u));
  const int id = edge_count();
  edges_.push_back({u, v});
  incident_[u].push_back(id);
  incident_[v].push_back(id);
  return id;
}

int MultiGraph::multiplicity(int u, int v) const {
  int count = 0;
  for (int e : incident_.at(u))
    if (opposite(e, u) == v) ++count;
  return count;
}

int MultiGraph::opposite(int edge_id, int v) const {
  const Edge& e = edges_.at(edge_id);
  return e.u == v ? e.v : e.u;
}

int MultiGraph::component_count() const {
  const int n = vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (const Edge& e : edges_) {
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

Tree::Tree(int vertex_count, std::span<const std::pair<int, int>> edges) : Tree(MultiGraph(vertex_count, edges)) {}

Tree::Tree(MultiGraph graph) : graph_(std::move(graph)) {
  const int n = graph_.vertex_count();
  if (n == 0) throw Error(ErrorKind::invalid_input, "not a tree", "empty");
  if (graph_.edge_count() != n - 1 || !graph_.is_connected()) throw Error(ErrorKind::invalid_input, "not a tree");
  for (int v = 0; v < n; ++v) {
    auto nb = neighbors(v);
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw Error(ErrorKind::invalid_input, "not a tree", "parallel edges");
  }
}

std::vector<int> Tree::neighbors(int v) const {
  std::vector<int> out;
  for (int e : graph_.incident_edges(v)) out.push_back(graph_.opposite(e, v));
  return out;
}

}  // namespace sandgroup
