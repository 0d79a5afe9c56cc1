#include <doctest.h>

#include <random>

#include "../support/fixtures.hpp"

using namespace sandgroup;

namespace {

SandpileModel tree_model(std::string_view tree, const CycleLengths& c) {
  auto built = build_G_Tc(catalog_tree(tree), c);
  return SandpileModel(std::move(built.graph), built.sink);
}

SandpileModel triangle() { return tree_model("2_0", {2, 2}); }

std::vector<Integer> big(const Configuration& c) {
  std::vector<Integer> out;
  for (auto x : c) out.emplace_back(static_cast<long>(x));
  return out;
}

Configuration random_config(const SandpileModel& m, int scale, std::mt19937_64& rng) {
  Configuration c(m.size());
  for (int i = 0; i < m.size(); ++i) {
    std::uniform_int_distribution<std::int64_t> pick(0, scale * m.degree(i));
    c[i] = pick(rng);
  }
  return c;
}

/// Small random models: outerplane graphs and tree-plus-sink graphs.
SandpileModel random_model(int trial, std::mt19937_64& rng) {
  const auto t = oracle::random_tree(1 + trial % 4, rng);
  const auto c = oracle::random_lengths(t, 2, 4, rng);
  if (trial % 2) {
    auto built = build_G_Tc(t, c);
    return SandpileModel(std::move(built.graph), built.sink);
  }
  auto g = build_outerplane(t, c).plane.graph();
  std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
  const int sink = pick(rng);
  return SandpileModel(std::move(g), sink);
}

}  // namespace

TEST_CASE("stabilisation on a triangle") {
  const auto m = triangle();
  const auto s = stabilize(m, Configuration{2, 0});
  CHECK(s.config == Configuration{0, 1});
  CHECK(s.firings == std::vector<std::int64_t>{1, 0});
  CHECK(stabilize(m, Configuration{1, 0}).config == Configuration{1, 0});
  CHECK(stabilize(m, Configuration{2, 2}).config == Configuration{1, 1});
  CHECK_THROWS_AS(stabilize(m, Configuration{-1, 0}), Error);
  CHECK_THROWS_AS(stabilize(m, Configuration{1}), Error);
}

TEST_CASE("toppling bound") {
  const SandpileModel m(triangle().graph(), 2, 10);
  try {
    stabilize(m, Configuration{1000, 1000});
    FAIL("expected a bound error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::bound_exceeded);
  }
}

TEST_CASE("stabilisation is independent of toppling order and certified by the firing vector") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_model(trial, rng);
    const auto c = random_config(m, 3, rng);
    const auto a = stabilize_random(m, c, rng);
    const auto b = stabilize_random(m, c, rng);
    const auto d = stabilize(m, c);
    CHECK(a.config == b.config);
    CHECK(a.firings == b.firings);
    CHECK(a.config == d.config);
    CHECK(a.firings == d.firings);
    CHECK(is_stable(m, d.config));
    std::vector<Integer> x;
    for (auto f : d.firings) {
      CHECK(f >= 0);
      x.emplace_back(static_cast<long>(-f));
    }
    CHECK(apply_firing(m, big(c), x) == big(d.config));
  }
}

TEST_CASE("burning test") {
  const auto m = triangle();
  CHECK(is_recurrent(m, Configuration{1, 1}));
  CHECK_FALSE(is_recurrent(m, Configuration{0, 0}));
  CHECK_THROWS_AS(is_recurrent(m, Configuration{2, 0}), Error);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const auto model = random_model(trial, rng);
    CHECK(is_recurrent(model, model.sigma_max()));
    if (model.tau() > 300) continue;
    for (const auto& c : oracle::all_stable(model))
      CHECK(is_recurrent(model, c) == oracle::recurrent_by_definition(model, c));
  }
}

TEST_CASE("identity elements of tree-plus-sink graphs") {
  CHECK(identity(tree_model("4_1", {3, 2, 2, 2})) == Configuration{0, 1, 1, 1});
  CHECK(identity(tree_model("8_22", {9, 3, 3, 3, 3, 3, 3, 3})) == Configuration{2, 2, 2, 2, 2, 2, 2, 2});
  CHECK(identity(tree_model("8_22", {7, 3, 3, 3, 3, 3, 3, 3})) == Configuration{0, 2, 2, 2, 2, 2, 2, 2});
  CHECK(identity(tree_model("6_2", {3, 3, 3, 3, 3, 3})) == Configuration{2, 2, 1, 1, 1, 1});
  CHECK(identity(tree_model("6_2", {3, 3, 2, 2, 2, 2})) == Configuration{2, 2, 1, 1, 1, 1});
  CHECK(identity(triangle()) == Configuration{1, 1});
}

TEST_CASE("group law on recurrent configurations") {
  std::mt19937_64 rng(8);
  int models = 0;
  for (int trial = 0; models < 25 && trial < 400; ++trial) {
    const auto m = random_model(trial, rng);
    if (m.tau() > 200) continue;
    ++models;
    std::vector<Configuration> recurrents;
    for (const auto& c : oracle::all_stable(m))
      if (is_recurrent(m, c)) recurrents.push_back(c);
    CHECK(Integer(static_cast<unsigned long>(recurrents.size())) == m.tau());
    const auto e = identity(m);
    CHECK(is_recurrent(m, e));
    CHECK(add(m, e, e) == e);
    CHECK(is_recurrent(m, add(m, m.sigma_max(), m.sigma_max())));
    for (const auto& r : recurrents) {
      CHECK(add(m, e, r) == r);
      bool has_inverse = false;
      for (const auto& s : recurrents) has_inverse = has_inverse || add(m, r, s) == e;
      CHECK(has_inverse);
    }
  }
  CHECK(models == 25);
}

TEST_CASE("identity is neutral on stabilised random recurrents") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_model(trial, rng);
    const auto e = identity(m);
    for (int k = 0; k < 20; ++k) {
      auto c = random_config(m, 4, rng);
      for (int i = 0; i < m.size(); ++i) c[i] += m.sigma_max()[i];
      const auto r = stabilize(m, c).config;
      REQUIRE(is_recurrent(m, r));
      CHECK(add(m, e, r) == r);
      CHECK(add(m, r, e) == r);
    }
  }
}

TEST_CASE("recurrent representatives") {
  const auto m = tree_model("6_2", {3, 3, 3, 3, 3, 3});
  const auto e = identity(m);
  const auto same = recurrent_representative(m, e);
  CHECK(same.config == e);
  for (const auto& x : same.shift) CHECK(x == 0);
  CHECK(recurrent_representative(m, Configuration(m.size(), 0)).config == e);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto model = random_model(trial, rng);
    std::vector<Integer> c(model.size());
    std::uniform_int_distribution<long> pick(-20, 20);
    for (auto& x : c) x = pick(rng);
    const auto rep = recurrent_representative(model, c);
    CHECK(is_recurrent(model, rep.config));
    CHECK(apply_firing(model, c, rep.shift) == big(rep.config));
    std::vector<Integer> z(model.size());
    std::uniform_int_distribution<long> shift(-3, 3);
    for (auto& x : z) x = shift(rng);
    CHECK(recurrent_representative(model, apply_firing(model, c, z)).config == rep.config);
    CHECK(recurrent_representative(model, rep.config).config == rep.config);
    std::vector<Integer> diff(model.size());
    for (int i = 0; i < model.size(); ++i) diff[i] = Integer(static_cast<long>(rep.config[i])) - c[i];
    for (const auto& q : oracle::solve_left(model.reduced_laplacian(), diff)) CHECK(q.get_den() == 1);
  }
}

TEST_CASE("recurrent representatives agree with the integer program") {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int trial = 0; checked < 50 && trial < 500; ++trial) {
    const auto m = random_model(trial, rng);
    if (m.tau() > 400) continue;
    std::vector<Integer> c(m.size());
    std::uniform_int_distribution<long> pick(-6, 6);
    for (auto& x : c) x = pick(rng);
    const auto rep = recurrent_representative(m, c);
    const auto ip = oracle::integer_program(m, c);
    CHECK(ip.config == rep.config);
    CHECK(ip.x == rep.shift);
    ++checked;
  }
  CHECK(checked == 50);
}
