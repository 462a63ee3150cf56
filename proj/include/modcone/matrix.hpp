#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "modcone/rational.hpp"

namespace modcone {

// Dense matrix of exact rationals, row major.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    RationalMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return c;
  }

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix sum: shape mismatch");
    RationalMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) c.entries_[i] = a.entries_[i] + b.entries_[i];
    return c;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

namespace detail {

// Row-scales a rational matrix to an integer one (rank preserving).
inline std::vector<std::vector<Integer>> to_integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l(1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Integer d = m.at(i, j).den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& r = m.at(i, j);
      a[i][j] = r.num() * (l / r.den());
    }
  }
  return a;
}

}  // namespace detail

// Exact rank over Q by Bareiss fraction-free elimination on the
// denominator-cleared integer matrix. Stops as soon as no pivot remains.
inline std::size_t matrix_rank(const RationalMatrix& m) {
  auto a = detail::to_integer_rows(m);
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  Integer prev(1);
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    // full pivot search in the remaining submatrix
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = k; i < rows && pi == rows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (a[i][j] != 0) { pi = i; pj = j; break; }
    if (pi == rows) break;
    std::swap(a[k], a[pi]);
    if (pj != k)
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][k], a[i][pj]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        Integer t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
    ++rank;
  }
  return rank;
}

// Exact determinant via Bareiss on the integer-scaled matrix.
inline Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  Integer scale(1);
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Integer l(1);
    for (std::size_t j = 0; j < n; ++j) {
      Integer d = m.at(i, j).den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j).num() * (l / m.at(i, j).den());
  }
  int sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pi = n;
    for (std::size_t i = k; i < n; ++i)
      if (a[i][k] != 0) { pi = i; break; }
    if (pi == n) return Rational(0);
    if (pi != k) { std::swap(a[k], a[pi]); sign = -sign; }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Integer det = a[n - 1][n - 1];
  if (sign < 0) det = -det;
  return Rational(det, scale);
}

// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pi = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) { pi = i; break; }
    if (pi == m.rows()) continue;
    if (pi != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pi, j));
    Rational inv = Rational(1) / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Basis of the right kernel {x : m x = 0}, one vector per free column.
inline std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::vector<std::size_t> pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a.at(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

enum class SolveStatus { kUnique, kInconsistent, kUnderdetermined };

struct SolveResult {
  SolveStatus status;
  std::vector<Rational> solution;  // populated only when unique
};

// Solves A x = b exactly and classifies the system.
inline SolveResult solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = rref(aug);
  for (std::size_t c : pivots)
    if (c == a.cols()) return {SolveStatus::kInconsistent, {}};
  if (pivots.size() < a.cols()) return {SolveStatus::kUnderdetermined, {}};
  std::vector<Rational> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
  return {SolveStatus::kUnique, std::move(x)};
}

// Whether A x = b has any solution.
inline bool is_solvable(const RationalMatrix& a, const std::vector<Rational>& b) {
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  return matrix_rank(a) == matrix_rank(aug);
}

}  // namespace modcone
