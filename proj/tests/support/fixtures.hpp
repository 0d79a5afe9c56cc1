#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "sandgroup/sandgroup.hpp"

namespace fixture {

using namespace sandgroup;

/// Wheel-like plane graph: an 8-cycle around a hub joined to every second rim vertex.
/// Vertex 8 is the hub; the rim runs 0..7.
inline PlaneGraph cone_graph() {
  const std::vector<std::pair<double, double>> at = {{-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1},
                                                     {1, 0},  {1, 1},  {0, 1},   {0, 0}};
  const std::vector<std::pair<int, int>> edges = {{8, 3}, {8, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 4},
                                                  {4, 5}, {5, 6}, {5, 8}, {6, 7}, {7, 0}, {7, 8}};
  return oracle::straight_line_embedding(at, edges);
}

/// The 11-vertex outerplane graph with faces of lengths 3,3,4,5,3,3.
inline PlaneGraph six_face_outerplane() {
  const std::vector<std::pair<double, double>> at = {{-2, 1.2}, {-1, .75},   {-.3, 1},   {.8, 1.2},
                                                     {1.4, 0},  {.8, -1.2},  {-.3, -1.2}, {-1, -.75},
                                                     {-2, -1.2}, {-2.5, -.25}, {-2.5, .25}};
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 11; ++i) edges.emplace_back(i, (i + 1) % 11);
  for (auto [u, v] : std::vector<std::pair<int, int>>{{2, 11}, {2, 8}, {8, 10}, {3, 5}, {5, 7}})
    edges.emplace_back(u - 1, v - 1);
  return oracle::straight_line_embedding(at, edges);
}

/// Its weak dual: leaves 0,1 on vertex 2, leaves 4,5 on vertex 3.
inline Tree six_face_tree() {
  return Tree(6, std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {3, 2}, {3, 4}, {3, 5}});
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// The 7-vertex plane multigraph with sink 6 whose identity is (2,2,1,1,1,1).
struct DualityExample {
  PlaneGraph plane;
  int sink;
  /// Face id for each dual label 0..6, then the outer label last.
  std::vector<int> face_of_label;
  /// Edge ids in the reference column order of the dual incidence matrix.
  std::vector<int> dual_columns;
};

inline DualityExample duality_example() {
  auto input = parse_plane_graph_json(read_file(SANDGROUP_TEST_DATA "/duality_example.json"));
  const std::vector<std::set<int>> label_edges = {{0, 4, 5, 6},  {4, 11},       {0, 1, 2, 7, 11}, {7, 8},
                                                  {2, 3, 8, 10}, {9, 10},       {1, 3, 5, 9, 12}, {6, 12}};
  std::vector<int> face_of_label;
  for (const auto& want : label_edges) {
    int found = -1;
    for (const auto& f : input.plane.faces()) {
      std::set<int> have;
      for (Dart d : f.boundary) have.insert(edge_of(d));
      if (have == want) found = f.id;
    }
    face_of_label.push_back(found);
  }
  input.plane.set_outer_face(face_of_label.back());
  return DualityExample{std::move(input.plane), input.sink, std::move(face_of_label),
                        {6, 4, 11, 0, 7, 2, 1, 8, 10, 3, 9, 5, 12}};
}

/// Reorders values indexed by non-sink dual vertex into label order 0..6.
inline Configuration by_label(const DualityExample& ex, const Configuration& by_index) {
  const int sink = ex.face_of_label.back();
  Configuration out;
  for (std::size_t label = 0; label + 1 < ex.face_of_label.size(); ++label) {
    const int face = ex.face_of_label[label];
    out.push_back(by_index[face < sink ? face : face - 1]);
  }
  return out;
}

}  // namespace fixture
