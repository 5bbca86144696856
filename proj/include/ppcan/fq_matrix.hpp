#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ppcan/field.hpp"

namespace ppcan {

/// Dense row-major matrix over F_q. Vectors are rows; modules act on the right.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(FieldPtr field, int rows, int cols);
  static FqMatrix identity(FieldPtr field, int n);
  static FqMatrix scalar(FieldPtr field, int n, Fe s);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  Fe operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Fe& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::span<const Fe> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  std::span<Fe> row(int r) {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  const std::vector<Fe>& data() const { return data_; }
  std::vector<Fe>& data() { return data_; }

  bool is_zero() const;
  bool is_identity() const;
  FqMatrix transpose() const;
  FqMatrix submatrix(int r0, int c0, int nr, int nc) const;
  FqMatrix select_rows(const std::vector<int>& idx) const;
  FqMatrix select_cols(const std::vector<int>& idx) const;
  /// Stack rows of b below this (same column count).
  FqMatrix vstack(const FqMatrix& b) const;
  FqMatrix hstack(const FqMatrix& b) const;

  friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend FqMatrix operator+(const FqMatrix& a, const FqMatrix& b);
  friend FqMatrix operator-(const FqMatrix& a, const FqMatrix& b);
  friend FqMatrix operator*(const FqMatrix& a, const FqMatrix& b);
  FqMatrix scaled(Fe s) const;
  FqMatrix power(long long e) const;

 private:
  FieldPtr field_;
  int rows_ = 0, cols_ = 0;
  std::vector<Fe> data_;
};

/// Kronecker product a (x) b.
FqMatrix kronecker(const FqMatrix& a, const FqMatrix& b);
FqMatrix block_diagonal(const FqMatrix& a, const FqMatrix& b);

/// Reduced row echelon form with pivot columns.
struct Echelon {
  FqMatrix reduced;  // only the nonzero rows
  std::vector<int> pivots;
};

Echelon rref(const FqMatrix& a);
int rank(const FqMatrix& a);
/// Rows spanning {x : a x^T = 0}.
FqMatrix right_kernel(const FqMatrix& a);
/// Rows spanning {v : v a = 0}.
FqMatrix left_kernel(const FqMatrix& a);
std::optional<FqMatrix> inverse(const FqMatrix& a);

/// One solution x of x a = b (row vectors) together with the left kernel of a.
struct Solution {
  FqMatrix particular;
  FqMatrix kernel;
};
std::optional<Solution> solve_left(const FqMatrix& a, const FqMatrix& b);

/// Echelonised row space with a coordinate map for vectors that lie in it.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(const FqMatrix& spanning);

  int dim() const { return basis_.rows(); }
  int ambient() const { return ambient_; }
  const FqMatrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  bool contains(std::span<const Fe> v) const;
  /// Coordinates of each row of v with respect to basis(); rows must lie in the space.
  FqMatrix coordinates(const FqMatrix& v) const;

 private:
  FqMatrix basis_;
  std::vector<int> pivots_;
  int ambient_ = 0;
};

/// Rows of `extra` (in order) that extend `base` to a basis of base + span(extra).
FqMatrix complement_rows(const Subspace& base, const FqMatrix& extra);

/// Incremental echelon basis. Each stored row is reduced against the earlier
/// ones; optionally tracks how stored rows combine the vectors that were added.
class EchelonBuilder {
 public:
  EchelonBuilder(FieldPtr field, int ambient, bool track = false);

  int size() const { return static_cast<int>(pivots_.size()); }
  int ambient() const { return ambient_; }
  /// Adds v if it is independent of the current span; returns whether it was added.
  bool add(std::span<const Fe> v);
  bool contains(std::span<const Fe> v) const;
  /// Coefficients of v in terms of the added vectors (requires tracking), or
  /// nullopt when v is outside the span.
  std::optional<std::vector<Fe>> express(std::span<const Fe> v) const;
  FqMatrix rows() const;

 private:
  std::vector<Fe> reduce(std::span<const Fe> v, std::vector<Fe>* coeffs) const;

  FieldPtr field_;
  int ambient_;
  bool track_;
  std::vector<std::vector<Fe>> rows_;
  std::vector<int> pivots_;
  std::vector<std::vector<Fe>> transform_;  // rows_[k] = sum_j transform_[k][j] * added_j
};

}  // namespace ppcan
