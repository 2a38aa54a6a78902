#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cliff/error.hpp"
#include "cliff/rational.hpp"

namespace cliff {

using Vector = std::vector<Rational>;

class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const Rational& v = a(i, l);
        if (sgn(v) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += v * b(l, j);
      }
    return out;
  }

  friend Vector operator*(const Matrix& a, const Vector& x) {
    if (a.cols_ != x.size()) throw DimensionMismatch("matrix-vector product: size mismatch");
    Vector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (sgn(a(i, j)) != 0) out[i] += a(i, j) * x[j];
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// [a | b], same row count.
  static Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw DimensionMismatch("hstack: row counts differ");
    Matrix out(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, a.cols_ + j) = b(i, j);
    }
    return out;
  }

  /// [a ; b], same column count.
  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw DimensionMismatch("vstack: column counts differ");
    Matrix out(a.rows_ + b.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out(a.rows_ + i, j) = b(i, j);
    return out;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

namespace detail {

using IntRows = std::vector<std::vector<Integer>>;

// Scales every row by the lcm of its denominators; row scaling keeps rank
// and (for augmented systems) the solution set.
inline IntRows to_integer_rows(const Matrix& a) {
  IntRows out(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Integer& d = a(i, j).get_den();
      if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& v = a(i, j);
      out[i][j] = v.get_num() * (l / v.get_den());
    }
  }
  return out;
}

// Fraction-free (Bareiss) forward elimination over the first `pivot_cols`
// columns. Each division by the previous pivot is exact (Sylvester's
// identity). Returns the pivot columns, in order; rows [0, rank) hold the
// echelon form.
inline std::vector<std::size_t> bareiss_forward(IntRows& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  if (rows == 0) return pivots;
  const std::size_t cols = m[0].size();
  Integer prev = 1, t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Integer& piv = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer lead = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = piv * m[i][j];
        if (sgn(lead) != 0) t -= lead * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

/// Exact rank by fraction-free elimination.
inline std::size_t bareiss_rank(const Matrix& a) {
  auto rows = detail::to_integer_rows(a);
  return detail::bareiss_forward(rows, a.cols()).size();
}

/// Solves the square system a x = b exactly; throws SingularMatrix when a is
/// not invertible.
inline Vector bareiss_solve(const Matrix& a, const Vector& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw DimensionMismatch("bareiss_solve: system is not square");
  Matrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto rows = detail::to_integer_rows(aug);
  const auto pivots = detail::bareiss_forward(rows, n);
  if (pivots.size() != n) throw SingularMatrix("bareiss_solve: rank " + std::to_string(pivots.size()) + " < " + std::to_string(n));
  Vector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational s = Rational(rows[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j)
      if (sgn(rows[ii][j]) != 0) s -= Rational(rows[ii][j]) * x[j];
    x[ii] = s / Rational(rows[ii][ii]);
  }
  return x;
}

/// Basis of {x : a x = 0} by Gauss-Jordan reduction; vectors are scaled to
/// primitive integer entries.
inline std::vector<Vector> null_space(const Matrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  Matrix m = a;
  std::vector<std::size_t> pivot_of_row;
  std::vector<int> is_pivot(cols, 0);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    pivot_of_row.push_back(c);
    is_pivot[c] = 1;
    ++r;
  }
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_of_row.size(); ++i) v[pivot_of_row[i]] = -m(i, free);
    Integer l = 1;
    for (const auto& e : v)
      if (e.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den().get_mpz_t());
    for (auto& e : v) e *= Rational(l);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Independent oracle for tests: rank via rational Gauss-Jordan.
inline std::size_t rational_rank(const Matrix& a) { return a.cols() - null_space(a).size(); }

}  // namespace cliff
