#include "sandgroup/laplacian.hpp"

#include <string>

#include "sandgroup/error.hpp"

namespace sandgroup {

IntMatrix laplacian(const MultiGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  IntMatrix l(n, n);
  for (const Edge& e : g.edges()) {
    l(e.u, e.u) += 1;
    l(e.v, e.v) += 1;
    l(e.u, e.v) -= 1;
    l(e.v, e.u) -= 1;
  }
  return l;
}

IntMatrix reduced_laplacian(const MultiGraph& g, int q) {
  if (q < 0 || q >= g.vertex_count())
    throw Error(ErrorKind::invalid_input, "vertex out of range", "sink " + std::to_string(q));
  return laplacian(g).without(static_cast<std::size_t>(q));
}

Integer spanning_tree_count(const MultiGraph& g) {
  if (g.vertex_count() == 0) return 0;
  if (!g.is_connected()) return 0;
  return determinant(reduced_laplacian(g, 0));
}

}  // namespace sandgroup
