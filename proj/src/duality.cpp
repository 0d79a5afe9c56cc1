#include "sandgroup/duality.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "sandgroup/error.hpp"

namespace sandgroup {

Orientation stored_orientation(const MultiGraph& g) {
  Orientation o;
  o.reserve(g.edge_count());
  for (const Edge& e : g.edges()) o.push_back({e.u, e.v});
  return o;
}

IntMatrix incidence_matrix(const MultiGraph& g, const Orientation& o) {
  if (static_cast<int>(o.size()) != g.edge_count())
    throw Error(ErrorKind::invalid_input, "incomplete orientation",
                std::to_string(o.size()) + " arcs for " + std::to_string(g.edge_count()) + " edges");
  IntMatrix m(g.vertex_count(), g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const Arc& a = o[e];
    if (!((a.tail == ed.u && a.head == ed.v) || (a.tail == ed.v && a.head == ed.u)))
      throw Error(ErrorKind::invalid_input, "bad orientation", "arc does not match edge " + std::to_string(e));
    m(a.tail, e) = -1;
    m(a.head, e) = 1;
  }
  return m;
}

Orientation right_left_orientation(const PlaneGraph& pg, const Orientation& o) {
  if (pg.has_bridge()) throw Error(ErrorKind::invalid_input, "bridge");
  const auto& g = pg.graph();
  if (static_cast<int>(o.size()) != g.edge_count()) throw Error(ErrorKind::invalid_input, "incomplete orientation");
  Orientation out;
  out.reserve(o.size());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Dart along = o[e].tail == g.edge(e).u ? forward_dart(e) : reverse(forward_dart(e));
    out.push_back({pg.face_of(reverse(along)), pg.face_of(along)});
  }
  return out;
}

std::vector<Integer> solve_flow(const IntMatrix& boundary, std::span<const Integer> d, int root) {
  const auto n = static_cast<int>(boundary.rows());
  const auto m = static_cast<int>(boundary.cols());
  if (static_cast<int>(d.size()) != n) throw Error(ErrorKind::invalid_input, "size mismatch");
  std::vector<Arc> arcs(m, Arc{-1, -1});
  std::vector<std::vector<int>> incident(n);
  for (int e = 0; e < m; ++e) {
    for (int v = 0; v < n; ++v) {
      const Integer& x = boundary(v, e);
      if (x == -1 && arcs[e].tail == -1) arcs[e].tail = v;
      else if (x == 1 && arcs[e].head == -1) arcs[e].head = v;
      else if (x != 0) throw Error(ErrorKind::invalid_input, "not an incidence matrix", "column " + std::to_string(e));
    }
    if (arcs[e].tail == -1 || arcs[e].head == -1)
      throw Error(ErrorKind::invalid_input, "not an incidence matrix", "column " + std::to_string(e));
    incident[arcs[e].tail].push_back(e);
    incident[arcs[e].head].push_back(e);
  }
  if (n > 0 && (root < 0 || root >= n)) throw Error(ErrorKind::invalid_input, "vertex out of range");

  std::vector<int> parent_edge(n, -1), order;
  std::vector<bool> seen(n, false);
  std::vector<int> roots;
  auto bfs = [&](int start) {
    roots.push_back(start);
    seen[start] = true;
    std::queue<int> queue;
    queue.push(start);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      order.push_back(v);
      for (int e : incident[v]) {
        const int w = arcs[e].tail == v ? arcs[e].head : arcs[e].tail;
        if (seen[w]) continue;
        seen[w] = true;
        parent_edge[w] = e;
        queue.push(w);
      }
    }
  };
  if (n > 0) bfs(root);
  for (int v = 0; v < n; ++v)
    if (!seen[v]) bfs(v);

  std::vector<Integer> need(d.begin(), d.end());
  std::vector<Integer> f(m, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    const int e = parent_edge[v];
    if (e < 0) continue;
    const int p = arcs[e].tail == v ? arcs[e].head : arcs[e].tail;
    f[e] = need[v] * boundary(v, e);
    need[p] -= boundary(p, e) * f[e];
    need[v] = 0;
  }
  for (int r : roots)
    if (need[r] != 0) throw Error(ErrorKind::infeasible, "infeasible", "demand does not sum to zero on a component");
  return f;
}

TransferResult transfer_config(const PlaneGraph& pg, int sink, std::span<const std::int64_t> d,
                               const std::optional<Orientation>& o) {
  const auto& g = pg.graph();
  if (sink < 0 || sink >= g.vertex_count()) throw Error(ErrorKind::invalid_input, "vertex out of range");
  if (static_cast<int>(d.size()) != g.vertex_count() - 1)
    throw Error(ErrorKind::invalid_input, "size mismatch",
                std::to_string(d.size()) + " entries for " + std::to_string(g.vertex_count() - 1) + " non-sink vertices");
  const Orientation primal = o ? *o : stored_orientation(g);
  const auto dg = dual(pg);

  std::vector<Integer> demand(g.vertex_count(), 0);
  Integer total = 0;
  for (int v = 0, i = 0; v < g.vertex_count(); ++v) {
    if (v == sink) continue;
    demand[v] = static_cast<long>(d[i++]);
    total += demand[v];
  }
  demand[sink] = -total;

  TransferResult out;
  out.flow = solve_flow(incidence_matrix(g, primal), demand);
  const auto dual_boundary = incidence_matrix(dg.plane.graph(), right_left_orientation(pg, primal));
  out.dual_boundary.assign(dg.plane.graph().vertex_count(), 0);
  for (std::size_t v = 0; v < dual_boundary.rows(); ++v)
    for (std::size_t e = 0; e < dual_boundary.cols(); ++e)
      if (dual_boundary(v, e) != 0) out.dual_boundary[v] += dual_boundary(v, e) * out.flow[e];

  out.dual_sink = dg.vertex_of_face[pg.outer_face()];
  for (int v = 0; v < static_cast<int>(out.dual_boundary.size()); ++v)
    if (v != out.dual_sink) out.dual_class.push_back(out.dual_boundary[v]);
  const SandpileModel model(dg.plane.graph(), out.dual_sink);
  out.recurrent = recurrent_representative(model, std::span<const Integer>(out.dual_class));
  return out;
}

}  // namespace sandgroup
