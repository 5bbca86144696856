#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ppcan/cyclotomic.hpp"
#include "ppcan/rational.hpp"

namespace ppcan {

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Cyc& x) { return x.is_zero(); }

/// Dense matrix over an exact field (Rational or Cyc), plain Gaussian elimination.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, T(0L)) {}
  static DenseMatrix identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1L);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::vector<T> row(int r) const {
    return std::vector<T>(a_.begin() + static_cast<long>(r) * cols_, a_.begin() + static_cast<long>(r + 1) * cols_);
  }
  std::vector<T> col(int c) const {
    std::vector<T> v;
    v.reserve(rows_);
    for (int r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("DenseMatrix product: shape mismatch");
    DenseMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& s = a(i, k);
        if (is_zero(s)) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += s * b(k, j);
      }
    return c;
  }
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// Row reduces in place; returns pivot columns.
  std::vector<int> rref_in_place() {
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < cols_ && r < rows_; ++col) {
      int piv = -1;
      for (int i = r; i < rows_; ++i)
        if (!is_zero((*this)(i, col))) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      if (piv != r)
        for (int j = 0; j < cols_; ++j) std::swap((*this)(r, j), (*this)(piv, j));
      const T inv = T(1L) / (*this)(r, col);
      for (int j = col; j < cols_; ++j) (*this)(r, j) *= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r) continue;
        const T s = (*this)(i, col);
        if (is_zero(s)) continue;
        for (int j = col; j < cols_; ++j) (*this)(i, j) -= s * (*this)(r, j);
      }
      pivots.push_back(col);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    DenseMatrix w = *this;
    return static_cast<int>(w.rref_in_place().size());
  }

  std::optional<DenseMatrix> inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    const int n = rows_;
    DenseMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = T(1L);
    }
    auto piv = aug.rref_in_place();
    if (static_cast<int>(piv.size()) < n || (n > 0 && piv[n - 1] >= n)) return std::nullopt;
    DenseMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
  }

  /// One solution x of (*this) x = b, or nullopt when inconsistent.
  std::optional<std::vector<T>> solve(const std::vector<T>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("solve: shape mismatch");
    DenseMatrix aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    auto piv = aug.rref_in_place();
    std::vector<T> x(cols_, T(0L));
    for (std::size_t r = 0; r < piv.size(); ++r) {
      if (piv[r] == cols_) return std::nullopt;
      x[piv[r]] = aug(static_cast<int>(r), cols_);
    }
    return x;
  }

  T determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    DenseMatrix w = *this;
    T det(1L);
    const int n = rows_;
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int i = col; i < n; ++i)
        if (!is_zero(w(i, col))) {
          piv = i;
          break;
        }
      if (piv < 0) return T(0L);
      if (piv != col) {
        for (int j = 0; j < n; ++j) std::swap(w(col, j), w(piv, j));
        det = -det;
      }
      det *= w(col, col);
      const T inv = T(1L) / w(col, col);
      for (int i = col + 1; i < n; ++i) {
        const T s = w(i, col) * inv;
        if (is_zero(s)) continue;
        for (int j = col; j < n; ++j) w(i, j) -= s * w(col, j);
      }
    }
    return det;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using RationalMatrix = DenseMatrix<Rational>;
using CycMatrix = DenseMatrix<Cyc>;

}  // namespace ppcan
