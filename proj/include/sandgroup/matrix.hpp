#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sandgroup/integer.hpp"

namespace sandgroup {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix submatrix(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const;
  /// Copy with row `index` and column `index` removed.
  IntMatrix without(std::size_t index) const;
  IntMatrix transposed() const;
  IntMatrix permuted(std::span<const std::size_t> row_order, std::span<const std::size_t> col_order) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant by fraction-free elimination. The 0x0 determinant is 1.
Integer determinant(const IntMatrix& m);

/// Unique rational solution of A x = b for square nonsingular A.
std::vector<mpq_class> solve_rational(const IntMatrix& a, std::span<const Integer> b);

struct SNFResult {
  /// d_1 | d_2 | ... | d_r, all positive.
  std::vector<Integer> invariant_factors;
  std::size_t rank = 0;
  /// Unimodular P (rows x rows) and Q (cols x cols) with P * M * Q diagonal.
  std::optional<IntMatrix> left;
  std::optional<IntMatrix> right;
};

SNFResult smith_normal_form(const IntMatrix& m, bool with_transforms = false);

/// gcd of all k x k minors (absolute values); 0 when they all vanish, 1 for k = 0.
Integer minor_gcd(const IntMatrix& m, std::size_t k);

/// Finite abelian group Z_{t_1} + ... + Z_{t_s} with t_i >= 2 and t_i | t_{i+1}.
struct GroupStructure {
  std::vector<Integer> torsion;
  Integer order = 1;

  /// Build from any list of cyclic orders; they are normalised (units dropped,
  /// divisibility chain restored) via the Smith form of the diagonal matrix.
  static GroupStructure from_cyclic_orders(std::span<const Integer> orders);

  std::size_t generator_count() const noexcept { return torsion.size(); }
  bool is_cyclic() const noexcept { return torsion.size() <= 1; }
  std::string display() const;

  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

/// Torsion part of coker(m) = Z^rows / im(m).
GroupStructure cokernel_torsion(const IntMatrix& m);

GroupStructure direct_sum(const GroupStructure& a, const GroupStructure& b);

}  // namespace sandgroup
