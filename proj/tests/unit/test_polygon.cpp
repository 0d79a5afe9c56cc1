#include <doctest.h>

#include <random>

#include "../support/fixtures.hpp"

using namespace sandgroup;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

PolygonFlowerSpec five_chain_flower() {
  return PolygonFlowerSpec{5,
                           {ladder(4, 5), ladder(4, 8), ladder(6, 2), ladder(6, 5), ladder(8, 5)},
                           std::vector<Attach>(5, Attach::first)};
}

PolygonFlowerSpec random_flower(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> cycle(3, 4), count(1, 3), sides(2, 5);
  PolygonFlowerSpec spec;
  spec.cycle_length = cycle(rng);
  for (int i = 0; i < spec.cycle_length; ++i) {
    PolygonChainSpec chain;
    const int n = count(rng);
    for (int j = 0; j < n; ++j) chain.lengths.push_back(sides(rng));
    const Attach where = rng() % 2 ? Attach::first : Attach::last;
    int& end = where == Attach::first ? chain.lengths.front() : chain.lengths.back();
    end = std::max(3, end);
    spec.chains.push_back(chain);
    spec.attach.push_back(where);
  }
  return spec;
}

Tree path_tree(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Tree(n, edges);
}

}  // namespace

TEST_CASE("polygon chain counts") {
  CHECK(tau_polygon_chain({{3}}) == 3);
  CHECK(tau_polygon_chain({{3, 3}}) == 8);
  CHECK(tau_polygon_chain({{4, 5}}) == 19);
  CHECK(tau_polygon_chain(ladder(6, 11)) == 271669860);
  CHECK(tau_polygon_chain(ladder(8, 11)) == Integer("7321437648"));
  CHECK(tau_polygon_chain_matchings({{3, 3}}) == 8);
  CHECK_THROWS_AS(tau_polygon_chain({{}}), Error);
  CHECK_THROWS_AS(tau_polygon_chain({{3, 1}}), Error);
}

TEST_CASE("chain counts match the matrix-tree theorem on the built chain") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> count(1, 6), sides(2, 7);
  for (int trial = 0; trial < 40; ++trial) {
    PolygonChainSpec spec;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) spec.lengths.push_back(sides(rng));
    const auto built = build_outerplane(path_tree(n), spec.lengths);
    CHECK(tau_polygon_chain(spec) == spanning_tree_count(built.plane.graph()));
  }
}

TEST_CASE("chain counts satisfy the three-term recurrence") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> count(3, 10), sides(2, 9);
  for (int trial = 0; trial < 50; ++trial) {
    PolygonChainSpec spec;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) spec.lengths.push_back(sides(rng));
    auto prefix = [&](int m) { return PolygonChainSpec{{spec.lengths.begin(), spec.lengths.begin() + m}}; };
    CHECK(tau_polygon_chain(spec) ==
          spec.lengths.back() * tau_polygon_chain(prefix(n - 1)) - tau_polygon_chain(prefix(n - 2)));
    CHECK(tau_polygon_chain(spec) == tau_polygon_chain_matchings(spec));
  }
}

TEST_CASE("uniform ladders: closed form, matchings and recurrence agree") {
  for (int k = 3; k <= 9; ++k)
    for (int n = 1; n <= 12; ++n) {
      const auto spec = ladder(k, n);
      const Integer closed = tau_ladder_closed_form(k, n);
      CHECK(closed == tau_polygon_chain(spec));
      CHECK(closed == tau_polygon_chain_matchings(spec));
    }
}

TEST_CASE("the five-chain flower") {
  const auto spec = five_chain_flower();
  CHECK(flower_tau(spec) == Integer("941912914331277000"));
  CHECK(flower_chain_product(spec) == Integer("235827017145720000"));
  CHECK(flower_deltas(spec) == ints({1, 15, 9450}));
  const auto g = flower_group(spec);
  CHECK(g.display() == "Z_15 ⊕ Z_630 ⊕ Z_99673324267860");
  CHECK(g.order == flower_tau(spec));
}

TEST_CASE("the flower of three triangles") {
  PolygonFlowerSpec spec{3, {{{3}}, {{3}}, {{3}}}, std::vector<Attach>(3, Attach::first)};
  const auto built = build_flower_graph(spec);
  CHECK(built.plane.graph().vertex_count() == 6);
  CHECK(flower_tau(spec) == determinant(reduced_laplacian(built.plane.graph(), 0)));
  CHECK(flower_group(spec) == cokernel_torsion(cycle_intersection_matrix(built.plane)));
  const auto wd = weak_dual(built.plane);
  const Tree star(4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
  CHECK(oracle::is_tree_isomorphic(wd, star));
}

TEST_CASE("random flowers against the matrix-tree theorem") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto spec = random_flower(rng);
    const auto built = build_flower_graph(spec);
    CHECK(flower_tau(spec) == spanning_tree_count(built.plane.graph()));
    CHECK(flower_group(spec) == cokernel_torsion(cycle_intersection_matrix(built.plane)));

    const auto wd = weak_dual(built.plane);
    const auto layout = flower_layout(spec);
    CHECK(oracle::is_tree_isomorphic(wd, layout.tree));
    int hubs = 0;
    for (int v = 0; v < wd.vertex_count(); ++v) hubs += wd.degree(v) > 2;
    CHECK(hubs <= 1);
  }
}

TEST_CASE("pairwise coprime chain counts give a cyclic group") {
  // Chain counts 3, 4, 5, 7.
  PolygonFlowerSpec spec{4, {{{3}}, {{4}}, {{5}}, {{7}}}, std::vector<Attach>(4, Attach::first)};
  const auto g = flower_group(spec);
  CHECK(g.is_cyclic());
  CHECK(g.order == flower_tau(spec));
  CHECK(flower_deltas(spec) == ints({1, 1}));
}

TEST_CASE("flower validation") {
  PolygonFlowerSpec digon{3, {{{2, 3}}, {{3}}, {{3}}}, std::vector<Attach>(3, Attach::first)};
  try {
    flower_tau(digon);
    FAIL("expected a contraction error");
  } catch (const Error& e) {
    CHECK(e.tag() == "contraction undefined");
  }
  digon.attach[0] = Attach::last;
  CHECK_NOTHROW(flower_tau(digon));
  CHECK(contract_attachment({{4, 5}}, Attach::last).lengths == std::vector<int>{4, 4});

  PolygonFlowerSpec short_spec{4, {{{3}}, {{3}}, {{3}}}, std::vector<Attach>(3, Attach::first)};
  CHECK_THROWS_AS(flower_tau(short_spec), Error);
}

TEST_CASE("contracting a ladder's end polygon gives the difference of consecutive ladders") {
  for (int k = 3; k <= 8; ++k)
    for (int n = 2; n <= 8; ++n)
      CHECK(tau_polygon_chain(contract_attachment(ladder(k, n), Attach::first)) ==
            tau_polygon_chain(ladder(k, n)) - tau_polygon_chain(ladder(k, n - 1)));
}
