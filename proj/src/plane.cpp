#include "sandgroup/plane.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "sandgroup/error.hpp"

namespace sandgroup {

PlaneGraph::PlaneGraph(MultiGraph graph, std::vector<std::vector<int>> rotation, std::optional<int> outer)
    : graph_(std::move(graph)), rotation_(std::move(rotation)) {
  const int n = graph_.vertex_count();
  const int m = graph_.edge_count();
  if (static_cast<int>(rotation_.size()) != n)
    throw Error(ErrorKind::invalid_input, "bad embedding", "rotation size differs from vertex count");
  if (!graph_.is_connected()) throw Error(ErrorKind::invalid_input, "disconnected");
  if (n == 0) throw Error(ErrorKind::invalid_input, "bad embedding", "empty graph");

  position_.assign(2 * m, -1);
  for (int v = 0; v < n; ++v) {
    const auto& rot = rotation_[v];
    if (static_cast<int>(rot.size()) != graph_.degree(v))
      throw Error(ErrorKind::invalid_input, "bad embedding", "rotation at vertex " + std::to_string(v));
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
      const int e = rot[i];
      if (e < 0 || e >= m) throw Error(ErrorKind::invalid_input, "bad embedding", "unknown edge id");
      const Edge& ed = graph_.edge(e);
      Dart d;
      if (ed.u == v) d = forward_dart(e);
      else if (ed.v == v) d = reverse(forward_dart(e));
      else throw Error(ErrorKind::invalid_input, "bad embedding", "edge not incident to vertex");
      if (position_[d] != -1) throw Error(ErrorKind::invalid_input, "bad embedding", "repeated edge-end");
      position_[d] = i;
    }
  }

  face_of_dart_.assign(2 * m, -1);
  for (Dart start = 0; start < 2 * m; ++start) {
    if (face_of_dart_[start] != -1) continue;
    Face f;
    f.id = static_cast<int>(faces_.size());
    Dart d = start;
    do {
      face_of_dart_[d] = f.id;
      f.boundary.push_back(d);
      d = next_in_face(d);
    } while (d != start);
    faces_.push_back(std::move(f));
  }
  if (m == 0) faces_.push_back(Face{0, {}});

  if (n - m + face_count() != 2)
    throw Error(ErrorKind::invalid_input, "bad embedding", "Euler characteristic is not 2");

  if (outer) {
    set_outer_face(*outer);
  } else {
    outer_ = 0;
    for (const Face& f : faces_)
      if (f.length() > faces_[outer_].length()) outer_ = f.id;
  }
}

void PlaneGraph::set_outer_face(int face_id) {
  if (face_id < 0 || face_id >= face_count())
    throw Error(ErrorKind::invalid_input, "bad embedding", "outer face " + std::to_string(face_id) + " out of range");
  outer_ = face_id;
}

int PlaneGraph::tail(Dart d) const {
  const Edge& e = graph_.edge(edge_of(d));
  return (d & 1) ? e.v : e.u;
}

Dart PlaneGraph::next_in_face(Dart d) const {
  const int v = head(d);
  const auto& rot = rotation_[v];
  const int k = static_cast<int>(rot.size());
  const int i = position_[reverse(d)];
  const int e = rot[(i + k - 1) % k];
  const Edge& ed = graph_.edge(e);
  return ed.u == v ? forward_dart(e) : reverse(forward_dart(e));
}

std::vector<int> PlaneGraph::interior_faces() const {
  std::vector<int> out;
  for (const Face& f : faces_)
    if (f.id != outer_) out.push_back(f.id);
  return out;
}

bool PlaneGraph::has_bridge() const {
  for (int e = 0; e < graph_.edge_count(); ++e)
    if (face_of_dart_[forward_dart(e)] == face_of_dart_[reverse(forward_dart(e))]) return true;
  return false;
}

std::vector<Face> trace_faces(const PlaneGraph& pg) { return pg.faces(); }

DualGraph dual(const PlaneGraph& pg) {
  if (pg.has_bridge()) throw Error(ErrorKind::invalid_input, "bridge");
  const int m = pg.graph().edge_count();
  MultiGraph g(pg.face_count());
  for (int e = 0; e < m; ++e) g.add_edge(pg.face_of(reverse(forward_dart(e))), pg.face_of(forward_dart(e)));
  std::vector<std::vector<int>> rotation(pg.face_count());
  for (const Face& f : pg.faces())
    for (Dart d : f.boundary) rotation[f.id].push_back(edge_of(d));
  PlaneGraph plane(std::move(g), std::move(rotation));
  std::vector<int> ids(pg.face_count());
  for (int i = 0; i < pg.face_count(); ++i) ids[i] = i;
  return DualGraph{std::move(plane), std::move(ids)};
}

MultiGraph weak_dual(const PlaneGraph& pg) {
  if (pg.has_bridge()) throw Error(ErrorKind::invalid_input, "bridge");
  const auto inner = pg.interior_faces();
  std::vector<int> index(pg.face_count(), -1);
  for (int i = 0; i < static_cast<int>(inner.size()); ++i) index[inner[i]] = i;
  MultiGraph g(static_cast<int>(inner.size()));
  for (int e = 0; e < pg.graph().edge_count(); ++e) {
    const int a = index[pg.face_of(reverse(forward_dart(e)))];
    const int b = index[pg.face_of(forward_dart(e))];
    if (a >= 0 && b >= 0) g.add_edge(a, b);
  }
  return g;
}

IntMatrix cycle_intersection_matrix(const PlaneGraph& pg) {
  if (pg.has_bridge()) throw Error(ErrorKind::invalid_input, "bridge");
  const auto inner = pg.interior_faces();
  std::vector<int> index(pg.face_count(), -1);
  for (int i = 0; i < static_cast<int>(inner.size()); ++i) index[inner[i]] = i;
  IntMatrix c(inner.size(), inner.size());
  for (int i = 0; i < static_cast<int>(inner.size()); ++i) c(i, i) = pg.faces()[inner[i]].length();
  for (int e = 0; e < pg.graph().edge_count(); ++e) {
    const int a = index[pg.face_of(forward_dart(e))];
    const int b = index[pg.face_of(reverse(forward_dart(e)))];
    if (a >= 0 && b >= 0) {
      c(a, b) -= 1;
      c(b, a) -= 1;
    }
  }
  return c;
}

std::vector<MultiGraph> biconnected_blocks(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> components;
  int timer = 0;

  std::function<void(int, int)> visit = [&](int v, int parent_edge) {
    disc[v] = low[v] = timer++;
    for (int e : g.incident_edges(v)) {
      if (e == parent_edge) continue;
      const int w = g.opposite(e, v);
      if (disc[w] == -1) {
        edge_stack.push_back(e);
        visit(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<int> block;
          int top;
          do {
            top = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(top);
          } while (top != e);
          components.push_back(std::move(block));
        }
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (disc[v] == -1) visit(v, -1);

  std::vector<MultiGraph> blocks;
  for (auto& block : components) {
    if (block.size() < 2) continue;
    std::sort(block.begin(), block.end());
    std::map<int, int> relabel;
    for (int e : block) {
      relabel[g.edge(e).u] = 0;
      relabel[g.edge(e).v] = 0;
    }
    int next = 0;
    for (auto& [v, id] : relabel) id = next++;
    MultiGraph b(next);
    for (int e : block) b.add_edge(relabel[g.edge(e).u], relabel[g.edge(e).v]);
    blocks.push_back(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end(), [](const MultiGraph& a, const MultiGraph& b) {
    return a.edge_count() > b.edge_count();
  });
  return blocks;
}

namespace {

void check_lengths(const Tree& t, const CycleLengths& c) {
  if (static_cast<int>(c.size()) != t.vertex_count())
    throw Error(ErrorKind::invalid_input, "size mismatch",
                std::to_string(c.size()) + " lengths for " + std::to_string(t.vertex_count()) + " vertices");
}

}  // namespace

OuterplaneGraph build_outerplane(const Tree& t, const CycleLengths& c) {
  check_lengths(t, c);
  const int n = t.vertex_count();
  for (int v = 0; v < n; ++v)
    if (c[v] < std::max(2, t.degree(v)))
      throw Error(ErrorKind::infeasible, "infeasible lengths",
                  "vertex " + std::to_string(v) + " has length " + std::to_string(c[v]) + " below " +
                      std::to_string(std::max(2, t.degree(v))));

  MultiGraph g;
  std::vector<std::vector<Dart>> polygon(n);  // CCW darts, side 0 first
  std::vector<bool> inner_dart;

  auto add_side = [&](int a, int b) {
    const int e = g.add_edge(a, b);
    inner_dart.resize(2 * g.edge_count(), false);
    inner_dart[forward_dart(e)] = true;
    return forward_dart(e);
  };

  {
    std::vector<int> w(c[0]);
    for (int& x : w) x = g.add_vertex();
    for (int i = 0; i < c[0]; ++i) polygon[0].push_back(add_side(w[i], w[(i + 1) % c[0]]));
  }

  std::function<void(int, int, int)> grow = [&](int v, int parent, int first_side) {
    auto children = t.neighbors(v);
    std::sort(children.begin(), children.end());
    int side = first_side;
    for (int w : children) {
      if (w == parent) continue;
      const Dart shared = polygon[v][side++];
      const int a = g.edge(edge_of(shared)).u;
      const int b = g.edge(edge_of(shared)).v;
      auto& poly = polygon[w];
      poly.push_back(reverse(shared));
      inner_dart[reverse(shared)] = true;
      int prev = a;
      for (int i = 0; i < c[w] - 2; ++i) {
        const int x = g.add_vertex();
        poly.push_back(add_side(prev, x));
        prev = x;
      }
      poly.push_back(add_side(prev, b));
      grow(w, v, 1);
    }
  };
  grow(0, -1, 0);

  const int m = g.edge_count();
  std::vector<Dart> next(2 * m, -1);
  for (const auto& poly : polygon)
    for (std::size_t i = 0; i < poly.size(); ++i) next[poly[i]] = poly[(i + 1) % poly.size()];

  auto dart_tail = [&](Dart d) { return (d & 1) ? g.edge(edge_of(d)).v : g.edge(edge_of(d)).u; };
  std::vector<Dart> outer_leaving(g.vertex_count(), -1);
  Dart some_outer = -1;
  for (Dart d = 0; d < 2 * m; ++d) {
    if (inner_dart[d]) continue;
    some_outer = d;
    int& slot = outer_leaving[dart_tail(d)];
    if (slot != -1) throw Error(ErrorKind::invalid_input, "bad embedding", "outer boundary is not a cycle");
    slot = d;
  }
  for (Dart d = 0; d < 2 * m; ++d)
    if (!inner_dart[d]) next[d] = outer_leaving[dart_tail(reverse(d))];

  // next(d) leaves head(d) along the edge preceding d's edge in the CCW rotation.
  std::vector<std::map<int, int>> before(g.vertex_count());
  for (Dart d = 0; d < 2 * m; ++d) before[dart_tail(reverse(d))][edge_of(d)] = edge_of(next[d]);
  std::vector<std::vector<int>> rotation(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int start = g.incident_edges(v).front();
    int e = start;
    do {
      rotation[v].push_back(e);
      e = before[v].at(e);
    } while (e != start);
    std::reverse(rotation[v].begin(), rotation[v].end());
  }

  PlaneGraph plane(std::move(g), std::move(rotation));
  plane.set_outer_face(plane.face_of(some_outer));
  std::vector<int> face_of_node(n);
  for (int v = 0; v < n; ++v) face_of_node[v] = plane.face_of(polygon[v].front());
  return OuterplaneGraph{std::move(plane), std::move(face_of_node)};
}

SinkGraph build_G_Tc(const Tree& t, const CycleLengths& c) {
  check_lengths(t, c);
  const int n = t.vertex_count();
  for (int v = 0; v < n; ++v) {
    const int need = t.degree(v) <= 1 ? 2 : t.degree(v);
    if (c[v] < need)
      throw Error(ErrorKind::infeasible, "infeasible lengths",
                  "vertex " + std::to_string(v) + " has length " + std::to_string(c[v]) + " below " +
                      std::to_string(need));
  }
  MultiGraph g(n + 1);
  for (const Edge& e : t.graph().edges()) g.add_edge(e.u, e.v);
  for (int v = 0; v < n; ++v)
    for (int i = t.degree(v); i < c[v]; ++i) g.add_edge(v, n);
  return SinkGraph{std::move(g), n};
}

}  // namespace sandgroup
