#include <doctest.h>

#include <random>

#include "../support/fixtures.hpp"

using namespace sandgroup;

namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols, int bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = pick(rng);
  return m;
}

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("determinant of small matrices") {
  CHECK(determinant(IntMatrix{{2, -1}, {-1, 2}}) == 3);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), Error);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto m = random_matrix(n, n, 9, rng);
    CHECK(determinant(m) == oracle::laplace_determinant(m));
  }
}

TEST_CASE("rational solve") {
  const IntMatrix a{{2, -1}, {-1, 2}};
  const auto b = ints({1, 0});
  const auto x = solve_rational(a, b);
  CHECK(x[0] == mpq_class(2, 3));
  CHECK(x[1] == mpq_class(1, 3));
  CHECK_THROWS_AS(solve_rational(IntMatrix{{1, 2}, {2, 4}}, b), Error);
}

TEST_CASE("Smith form of a diagonal matrix") {
  const auto snf = smith_normal_form(IntMatrix{{4, 0}, {0, 6}});
  CHECK(snf.invariant_factors == ints({2, 12}));
  CHECK(snf.rank == 2);
}

TEST_CASE("Smith form of rank-deficient and empty matrices") {
  CHECK(smith_normal_form(IntMatrix(3, 2)).rank == 0);
  const auto snf = smith_normal_form(IntMatrix{{2, 4, 6}, {1, 2, 3}});
  CHECK(snf.rank == 1);
  CHECK(snf.invariant_factors == ints({1}));
}

TEST_CASE("Smith form invariants on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t rows = 1 + trial % 8;
    const std::size_t cols = 1 + (trial / 8) % 8;
    const auto m = random_matrix(rows, cols, 9, rng);
    const bool transforms = trial % 5 == 0;
    const auto snf = smith_normal_form(m, transforms);
    const auto& d = snf.invariant_factors;
    REQUIRE(d.size() == snf.rank);
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(d[i] > 0);
      if (i + 1 < d.size()) CHECK(d[i + 1] % d[i] == 0);
    }
    if (rows == cols && snf.rank == rows) {
      Integer product = 1;
      for (const auto& x : d) product *= x;
      CHECK(product == abs_of(determinant(m)));
    }
    if (transforms) {
      REQUIRE(snf.left);
      REQUIRE(snf.right);
      CHECK(abs_of(determinant(*snf.left)) == 1);
      CHECK(abs_of(determinant(*snf.right)) == 1);
      const IntMatrix diag = *snf.left * m * *snf.right;
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
          const Integer want = (r == c && r < d.size()) ? d[r] : Integer(0);
          CHECK(diag(r, c) == want);
        }
    }
  }
}

TEST_CASE("minor gcd matches exhaustive minors and the Smith form") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_matrix(5, 5, 6, rng);
    const auto snf = smith_normal_form(m);
    Integer previous = 1;
    for (std::size_t k = 1; k <= 5; ++k) {
      const Integer g = minor_gcd(m, k);
      CHECK(g == oracle::brute_minor_gcd(m, k));
      if (previous != 0) {
        const Integer dk = k <= snf.rank ? snf.invariant_factors[k - 1] : Integer(0);
        CHECK(g / previous == dk);
      }
      previous = g;
    }
  }
}

TEST_CASE("minor gcd edge cases") {
  const IntMatrix m{{2, -1}, {-1, 2}};
  CHECK(minor_gcd(m, 0) == 1);
  CHECK(minor_gcd(m, 1) == 1);
  CHECK(minor_gcd(m, 2) == 3);
  CHECK(minor_gcd(IntMatrix(2, 2), 1) == 0);
  CHECK_THROWS_AS(minor_gcd(m, 3), Error);
}

TEST_CASE("group structure normalisation and display") {
  const auto g = GroupStructure::from_cyclic_orders(ints({1, 4, 6}));
  CHECK(g.torsion == ints({2, 12}));
  CHECK(g.order == 24);
  CHECK(g.display() == "Z_2 ⊕ Z_12");
  CHECK(GroupStructure::from_cyclic_orders(ints({1, 1})).display() == "0");
  CHECK(GroupStructure::from_cyclic_orders(ints({3, 5})).is_cyclic());
  CHECK(direct_sum(GroupStructure::from_cyclic_orders(ints({3})), GroupStructure::from_cyclic_orders(ints({3})))
            .torsion == ints({3, 3}));
}

TEST_CASE("cokernel torsion of a triangle's reduced Laplacian") {
  const auto g = cokernel_torsion(IntMatrix{{2, -1}, {-1, 2}});
  CHECK(g.torsion == ints({3}));
  CHECK(g.order == 3);
}

TEST_CASE("cone over an 8-cycle") {
  const auto h = fixture::cone_graph();
  const auto reduced = reduced_laplacian(h.graph(), 8);
  CHECK(minor_gcd(reduced, 7) == 8);
  CHECK(determinant(reduced) == 192);
  const auto snf = smith_normal_form(reduced);
  REQUIRE(snf.invariant_factors.size() == 8);
  for (int i = 0; i < 6; ++i) CHECK(snf.invariant_factors[i] == 1);
  CHECK(snf.invariant_factors[6] == 8);
  CHECK(snf.invariant_factors[7] == 24);
  CHECK(cokernel_torsion(cycle_intersection_matrix(h)).display() == "Z_8 ⊕ Z_24");
}

TEST_CASE("Smith form of the six-face outerplane graph") {
  const auto g = fixture::six_face_outerplane();
  const auto snf = smith_normal_form(cycle_intersection_matrix(g));
  CHECK(snf.invariant_factors == ints({1, 1, 1, 1, 3, 363}));
}
