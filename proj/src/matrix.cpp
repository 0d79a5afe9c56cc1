#include "sandgroup/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "sandgroup/error.hpp"

namespace sandgroup {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::invalid_input, "ragged matrix");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const {
  IntMatrix out(row_ids.size(), col_ids.size());
  for (std::size_t i = 0; i < row_ids.size(); ++i)
    for (std::size_t j = 0; j < col_ids.size(); ++j) out(i, j) = (*this)(row_ids[i], col_ids[j]);
  return out;
}

IntMatrix IntMatrix::without(std::size_t index) const {
  std::vector<std::size_t> r, c;
  for (std::size_t i = 0; i < rows_; ++i)
    if (i != index) r.push_back(i);
  for (std::size_t j = 0; j < cols_; ++j)
    if (j != index) c.push_back(j);
  return submatrix(r, c);
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::permuted(std::span<const std::size_t> row_order, std::span<const std::size_t> col_order) const {
  return submatrix(row_order, col_order);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::invalid_input, "dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << rows_ << ' ' << cols_ << '\n';
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
    os << '\n';
  }
  return os.str();
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::invalid_input, "non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<mpq_class> solve_rational(const IntMatrix& a, std::span<const Integer> b) {
  if (!a.is_square() || a.rows() != b.size()) throw Error(ErrorKind::invalid_input, "dimension mismatch");
  const std::size_t n = a.rows();
  std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    aug[i][n] = b[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && aug[p][k] == 0) ++p;
    if (p == n) throw Error(ErrorKind::infeasible, "singular matrix");
    std::swap(aug[k], aug[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || aug[i][k] == 0) continue;
      mpq_class factor = aug[i][k] / aug[k][k];
      for (std::size_t j = k; j <= n; ++j) aug[i][j] -= factor * aug[k][j];
    }
  }
  std::vector<mpq_class> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n] / aug[i][i];
  return x;
}

namespace {

struct Reducer {
  IntMatrix a;
  std::optional<IntMatrix> p;
  std::optional<IntMatrix> q;

  // row_dst += factor * row_src
  void add_row(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t j = 0; j < a.cols(); ++j) a(dst, j) += factor * a(src, j);
    if (p)
      for (std::size_t j = 0; j < p->cols(); ++j) (*p)(dst, j) += factor * (*p)(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, dst) += factor * a(i, src);
    if (q)
      for (std::size_t i = 0; i < q->rows(); ++i) (*q)(i, dst) += factor * (*q)(i, src);
  }
  void swap_rows(std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    if (p) p->swap_rows(x, y);
  }
  void swap_cols(std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    if (q) q->swap_cols(x, y);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = -a(r, j);
    if (p)
      for (std::size_t j = 0; j < p->cols(); ++j) (*p)(r, j) = -(*p)(r, j);
  }
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m, bool with_transforms) {
  Reducer red{m, std::nullopt, std::nullopt};
  if (with_transforms) {
    red.p = IntMatrix::identity(m.rows());
    red.q = IntMatrix::identity(m.cols());
  }
  IntMatrix& a = red.a;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    bool found_nonzero = true;
    for (;;) {
      // Pivot on the smallest nonzero magnitude of the trailing block.
      std::size_t pi = rows, pj = cols;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          if (pi == rows || mpz_cmpabs(a(i, j).get_mpz_t(), best.get_mpz_t()) < 0) {
            best = a(i, j);
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) {
        found_nonzero = false;
        break;
      }
      red.swap_rows(t, pi);
      red.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer quotient;
        mpz_tdiv_q(quotient.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        if (quotient != 0) red.add_row(i, t, -quotient);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer quotient;
        mpz_tdiv_q(quotient.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        if (quotient != 0) red.add_col(j, t, -quotient);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column are clear; the pivot must divide the rest of the block.
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      red.add_row(t, bad_row, 1);
    }
    if (!found_nonzero) break;
    if (a(t, t) < 0) red.negate_row(t);
  }

  SNFResult out;
  out.rank = t;
  for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(a(i, i));
  out.left = std::move(red.p);
  out.right = std::move(red.q);
  return out;
}

Integer minor_gcd(const IntMatrix& m, std::size_t k) {
  if (k == 0) return 1;
  if (k > std::min(m.rows(), m.cols())) throw Error(ErrorKind::invalid_input, "minor size out of range");

  std::vector<std::size_t> row_ids(k), col_ids(k);
  auto first = [](std::vector<std::size_t>& ids) { std::iota(ids.begin(), ids.end(), std::size_t{0}); };
  auto next = [k](std::vector<std::size_t>& ids, std::size_t n) {
    std::size_t i = k;
    while (i-- > 0) {
      if (ids[i] < n - k + i) {
        ++ids[i];
        for (std::size_t j = i + 1; j < k; ++j) ids[j] = ids[j - 1] + 1;
        return true;
      }
    }
    return false;
  };

  Integer g = 0;
  first(row_ids);
  do {
    first(col_ids);
    do {
      g = gcd_of(g, determinant(m.submatrix(row_ids, col_ids)));
      if (g == 1) return g;
    } while (next(col_ids, m.cols()));
  } while (next(row_ids, m.rows()));
  return g;
}

GroupStructure GroupStructure::from_cyclic_orders(std::span<const Integer> orders) {
  std::vector<Integer> entries;
  for (const auto& o : orders) {
    if (o == 0) throw Error(ErrorKind::invalid_input, "infinite cyclic factor");
    entries.push_back(abs_of(o));
  }
  return cokernel_torsion(IntMatrix::diagonal(entries));
}

std::string GroupStructure::display() const {
  if (torsion.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (i) s += " ⊕ ";
    s += "Z_" + torsion[i].get_str();
  }
  return s;
}

GroupStructure cokernel_torsion(const IntMatrix& m) {
  GroupStructure g;
  for (auto& d : smith_normal_form(m).invariant_factors) {
    if (d > 1) {
      g.order *= d;
      g.torsion.push_back(std::move(d));
    }
  }
  return g;
}

GroupStructure direct_sum(const GroupStructure& a, const GroupStructure& b) {
  std::vector<Integer> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  return GroupStructure::from_cyclic_orders(orders);
}

}  // namespace sandgroup
