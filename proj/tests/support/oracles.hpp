#pragma once

// Brute-force reference computations for the test suites.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "sandgroup/sandgroup.hpp"

namespace oracle {

using sandgroup::Integer;
using sandgroup::IntMatrix;
using sandgroup::MultiGraph;

/// Spanning trees by testing every (n-1)-edge subset.
inline std::uint64_t count_spanning_trees(const MultiGraph& g) {
  const int n = g.vertex_count(), m = g.edge_count();
  if (n <= 1) return 1;
  std::uint64_t count = 0;
  std::vector<int> chosen;
  std::function<void(int)> pick = [&](int from) {
    if (static_cast<int>(chosen.size()) == n - 1) {
      std::vector<int> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
      for (int e : chosen) {
        int a = find(g.edge(e).u), b = find(g.edge(e).v);
        if (a == b) return;
        parent[a] = b;
      }
      ++count;
      return;
    }
    for (int e = from; e < m; ++e) {
      if (m - e < n - 1 - static_cast<int>(chosen.size())) return;
      chosen.push_back(e);
      pick(e + 1);
      chosen.pop_back();
    }
  };
  pick(0);
  return count;
}

/// Determinant by cofactor expansion along the first row.
inline Integer laplace_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 1; r < n; ++r) rows.push_back(r);
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    Integer term = m(0, j) * laplace_determinant(m.submatrix(rows, cols));
    if (j % 2) total -= term;
    else total += term;
  }
  return total;
}

/// gcd of all k-minors, each evaluated by cofactor expansion.
inline Integer brute_minor_gcd(const IntMatrix& m, std::size_t k) {
  if (k == 0) return 1;
  std::vector<std::vector<std::size_t>> row_sets, col_sets;
  std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, std::vector<std::vector<std::size_t>>&)>
      subsets = [&](std::size_t from, std::size_t limit, std::vector<std::size_t>& cur, auto& out) {
        if (cur.size() == k) {
          out.push_back(cur);
          return;
        }
        for (std::size_t i = from; i < limit; ++i) {
          cur.push_back(i);
          subsets(i + 1, limit, cur, out);
          cur.pop_back();
        }
      };
  std::vector<std::size_t> cur;
  subsets(0, m.rows(), cur, row_sets);
  subsets(0, m.cols(), cur, col_sets);
  Integer g = 0;
  for (const auto& r : row_sets)
    for (const auto& c : col_sets) g = sandgroup::gcd_of(g, laplace_determinant(m.submatrix(r, c)));
  return g;
}

/// Multigraph isomorphism by backtracking over degree-compatible assignments.
inline bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto mult = [](const MultiGraph& g) {
    std::vector<std::vector<int>> m(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
    for (const auto& e : g.edges()) ++m[e.u][e.v], ++m[e.v][e.u];
    return m;
  };
  const auto ma = mult(a), mb = mult(b);
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) da[v] = a.degree(v), db[v] = b.degree(v);
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> to(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> place = [&](int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || da[v] != db[w]) continue;
      bool fits = true;
      for (int u = 0; u < v && fits; ++u) fits = ma[v][u] == mb[w][to[u]];
      if (!fits) continue;
      to[v] = w;
      used[w] = true;
      if (place(v + 1)) return true;
      used[w] = false;
    }
    to[v] = -1;
    return false;
  };
  return place(0);
}

inline bool is_tree_isomorphic(const MultiGraph& g, const sandgroup::Tree& t) { return isomorphic(g, t.graph()); }

/// Uniform labelled tree via a random Pruefer sequence.
inline sandgroup::Tree random_tree(int n, std::mt19937_64& rng) {
  if (n == 1) return sandgroup::Tree(1, std::vector<std::pair<int, int>>{});
  if (n == 2) return sandgroup::Tree(2, std::vector<std::pair<int, int>>{{0, 1}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& x : code) x = pick(rng);
  std::vector<int> degree(n, 1);
  for (int x : code) ++degree[x];
  std::vector<std::pair<int, int>> edges;
  for (int x : code) {
    for (int leaf = 0; leaf < n; ++leaf)
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, x);
        --degree[leaf];
        --degree[x];
        break;
      }
  }
  std::vector<int> last;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) last.push_back(v);
  edges.emplace_back(last[0], last[1]);
  return sandgroup::Tree(n, edges);
}

/// Lengths with c_v >= max(2, deg(v)) drawn from [lo, hi].
inline sandgroup::CycleLengths random_lengths(const sandgroup::Tree& t, int lo, int hi, std::mt19937_64& rng) {
  sandgroup::CycleLengths c(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) {
    std::uniform_int_distribution<int> pick(std::max({lo, 2, t.degree(v)}), std::max({hi, 2, t.degree(v)}));
    c[v] = pick(rng);
  }
  return c;
}

/// All stable configurations of a model, in lexicographic order.
inline std::vector<sandgroup::Configuration> all_stable(const sandgroup::SandpileModel& m) {
  std::vector<sandgroup::Configuration> out;
  sandgroup::Configuration c(m.size(), 0);
  std::function<void(int)> fill = [&](int i) {
    if (i == m.size()) {
      out.push_back(c);
      return;
    }
    for (std::int64_t x = 0; x < m.degree(i); ++x) {
      c[i] = x;
      fill(i + 1);
    }
  };
  fill(0);
  return out;
}

/// Recurrence by definition: c = s(c + beta) with beta the burning configuration.
inline bool recurrent_by_definition(const sandgroup::SandpileModel& m, const sandgroup::Configuration& c) {
  sandgroup::Configuration sum = c;
  for (int i = 0; i < m.size(); ++i) sum[i] += m.burning()[i];
  return sandgroup::stabilize(m, sum).config == c;
}

/// Exact rational solve of x L = v by Gauss-Jordan on mpq_class.
inline std::vector<mpq_class> solve_left(const IntMatrix& l, const std::vector<Integer>& v) {
  const std::size_t n = l.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = l(j, i);
    a[i][n] = v[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class f = a[r][col] / a[col][col];
      for (std::size_t j = col; j <= n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<mpq_class> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

struct IntegerProgramSolution {
  sandgroup::Configuration config;
  std::vector<Integer> x;
};

/// Maximises 1.x subject to 0 <= c + x L <= sigma_max over integer x, by
/// enumerating every stable r and keeping those with (r - c) L^-1 integral.
inline IntegerProgramSolution integer_program(const sandgroup::SandpileModel& m, const std::vector<Integer>& c) {
  IntegerProgramSolution best;
  bool have = false;
  Integer best_sum;
  for (const auto& r : all_stable(m)) {
    std::vector<Integer> diff(m.size());
    for (int i = 0; i < m.size(); ++i) diff[i] = Integer(static_cast<long>(r[i])) - c[i];
    const auto x = solve_left(m.reduced_laplacian(), diff);
    bool integral = true;
    for (const auto& q : x) integral = integral && q.get_den() == 1;
    if (!integral) continue;
    Integer sum = 0;
    std::vector<Integer> xi;
    for (const auto& q : x) {
      xi.push_back(q.get_num());
      sum += q.get_num();
    }
    if (!have || sum > best_sum) {
      have = true;
      best_sum = sum;
      best = {r, xi};
    }
  }
  return best;
}

/// Plane graph from straight-line vertex coordinates; rotations sorted by angle.
inline sandgroup::PlaneGraph straight_line_embedding(const std::vector<std::pair<double, double>>& at,
                                                     const std::vector<std::pair<int, int>>& edges) {
  MultiGraph g(static_cast<int>(at.size()), edges);
  std::vector<std::vector<int>> rotation(at.size());
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident_edges(v);
    auto angle = [&](int e) {
      const int w = g.opposite(e, v);
      return std::atan2(at[w].second - at[v].second, at[w].first - at[v].first);
    };
    std::sort(inc.begin(), inc.end(), [&](int x, int y) { return angle(x) < angle(y); });
    rotation[v] = inc;
  }
  return sandgroup::PlaneGraph(std::move(g), std::move(rotation));
}

}  // namespace oracle
