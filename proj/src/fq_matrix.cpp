#include "ppcan/fq_matrix.hpp"

#include <stdexcept>

#include "ppcan/kernels.hpp"

namespace ppcan {

FqMatrix::FqMatrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, Fe{0}) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

FqMatrix FqMatrix::identity(FieldPtr field, int n) { return scalar(std::move(field), n, 1); }

FqMatrix FqMatrix::scalar(FieldPtr field, int n, Fe s) {
  FqMatrix m(std::move(field), n, n);
  for (int i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

bool FqMatrix::is_zero() const {
  for (Fe x : data_)
    if (x) return false;
  return true;
}

bool FqMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

FqMatrix FqMatrix::submatrix(int r0, int c0, int nr, int nc) const {
  FqMatrix s(field_, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
  return s;
}

FqMatrix FqMatrix::select_rows(const std::vector<int>& idx) const {
  FqMatrix s(field_, static_cast<int>(idx.size()), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (int j = 0; j < cols_; ++j) s(static_cast<int>(i), j) = (*this)(idx[i], j);
  return s;
}

FqMatrix FqMatrix::select_cols(const std::vector<int>& idx) const {
  FqMatrix s(field_, rows_, static_cast<int>(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s(i, static_cast<int>(j)) = (*this)(i, idx[j]);
  return s;
}

FqMatrix FqMatrix::vstack(const FqMatrix& b) const {
  if (rows_ == 0) return b;
  if (b.rows_ == 0) return *this;
  if (cols_ != b.cols_) throw std::invalid_argument("vstack: column mismatch");
  FqMatrix s(field_, rows_ + b.rows_, cols_);
  std::copy(data_.begin(), data_.end(), s.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(), s.data_.begin() + static_cast<long>(data_.size()));
  return s;
}

FqMatrix FqMatrix::hstack(const FqMatrix& b) const {
  if (cols_ == 0 && rows_ == 0) return b;
  if (rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
  FqMatrix s(field_ ? field_ : b.field_, rows_, cols_ + b.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) s(i, j) = (*this)(i, j);
    for (int j = 0; j < b.cols_; ++j) s(i, cols_ + j) = b(i, j);
  }
  return s;
}

FqMatrix operator+(const FqMatrix& a, const FqMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  FqMatrix c(a.field_, a.rows_, a.cols_);
  const Field& f = *a.field_;
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = f.add(a.data_[i], b.data_[i]);
  return c;
}

FqMatrix operator-(const FqMatrix& a, const FqMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  FqMatrix c(a.field_, a.rows_, a.cols_);
  const Field& f = *a.field_;
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = f.sub(a.data_[i], b.data_[i]);
  return c;
}

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  FqMatrix c(a.field_ ? a.field_ : b.field_, a.rows_, b.cols_);
  if (a.rows_ == 0 || b.cols_ == 0) return c;
  kernels::multiply(*c.field_, {a.data_.data(), a.rows_, a.cols_}, {b.data_.data(), b.rows_, b.cols_},
                    c.data_.data());
  return c;
}

FqMatrix FqMatrix::scaled(Fe s) const {
  FqMatrix c(field_, rows_, cols_);
  const Fe* row = field_->mul_row(s);
  for (std::size_t i = 0; i < data_.size(); ++i) c.data_[i] = row[data_[i]];
  return c;
}

FqMatrix FqMatrix::power(long long e) const {
  if (rows_ != cols_) throw std::invalid_argument("power of non-square matrix");
  FqMatrix result = identity(field_, rows_), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

FqMatrix kronecker(const FqMatrix& a, const FqMatrix& b) {
  FqMatrix k(a.field_ptr(), a.rows() * b.rows(), a.cols() * b.cols());
  const Field& f = a.field();
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Fe s = a(i, j);
      if (!s) continue;
      const Fe* mrow = f.mul_row(s);
      for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) k(i * b.rows() + r, j * b.cols() + c) = mrow[b(r, c)];
    }
  return k;
}

FqMatrix block_diagonal(const FqMatrix& a, const FqMatrix& b) {
  FqMatrix d(a.field_ptr() ? a.field_ptr() : b.field_ptr(), a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) d(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) d(a.rows() + i, a.cols() + j) = b(i, j);
  return d;
}

Echelon rref(const FqMatrix& a) {
  FqMatrix work = a;
  auto pivots = kernels::rref(work.field(), work.data().data(), work.rows(), work.cols());
  Echelon e{work.submatrix(0, 0, static_cast<int>(pivots.size()), a.cols()), std::move(pivots)};
  return e;
}

int rank(const FqMatrix& a) {
  if (a.empty()) return 0;
  return static_cast<int>(rref(a).pivots.size());
}

FqMatrix right_kernel(const FqMatrix& a) {
  const int n = a.cols();
  if (a.rows() == 0) return FqMatrix::identity(a.field_ptr(), n);
  Echelon e = rref(a);
  std::vector<char> is_pivot(n, 0);
  for (int c : e.pivots) is_pivot[c] = 1;
  std::vector<int> free;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  const Field& f = a.field();
  FqMatrix k(a.field_ptr(), static_cast<int>(free.size()), n);
  for (std::size_t t = 0; t < free.size(); ++t) {
    const int fc = free[t];
    k(static_cast<int>(t), fc) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      k(static_cast<int>(t), e.pivots[r]) = f.neg(e.reduced(static_cast<int>(r), fc));
  }
  return k;
}

FqMatrix left_kernel(const FqMatrix& a) { return right_kernel(a.transpose()); }

std::optional<FqMatrix> inverse(const FqMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const int n = a.rows();
  FqMatrix aug = a.hstack(FqMatrix::identity(a.field_ptr(), n));
  Echelon e = rref(aug);
  if (static_cast<int>(e.pivots.size()) < n || (n > 0 && e.pivots[n - 1] >= n)) return std::nullopt;
  return e.reduced.submatrix(0, n, n, n);
}

std::optional<Solution> solve_left(const FqMatrix& a, const FqMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("solve_left: shape mismatch");
  const int n = a.rows();  // unknowns per right-hand side
  const Field& f = a.field();
  FqMatrix aug = a.transpose().hstack(b.transpose());
  Echelon e = rref(aug);
  FqMatrix x(a.field_ptr(), b.rows(), n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const int pc = e.pivots[r];
    if (pc >= n) return std::nullopt;  // inconsistent
    for (int j = 0; j < b.rows(); ++j) x(j, pc) = e.reduced(static_cast<int>(r), n + j);
  }
  (void)f;
  return Solution{x, left_kernel(a)};
}

Subspace::Subspace(const FqMatrix& spanning) : ambient_(spanning.cols()) {
  if (spanning.rows() == 0) {
    basis_ = FqMatrix(spanning.field_ptr(), 0, ambient_);
    return;
  }
  Echelon e = rref(spanning);
  basis_ = std::move(e.reduced);
  pivots_ = std::move(e.pivots);
}

bool Subspace::contains(std::span<const Fe> v) const {
  const Field& f = basis_.field();
  std::vector<Fe> w(v.begin(), v.end());
  for (int r = 0; r < dim(); ++r) {
    const Fe s = w[pivots_[r]];
    if (!s) continue;
    const Fe* mrow = f.mul_row(f.neg(s));
    auto brow = basis_.row(r);
    for (int j = 0; j < ambient_; ++j) w[j] = f.add(w[j], mrow[brow[j]]);
  }
  for (Fe x : w)
    if (x) return false;
  return true;
}

FqMatrix Subspace::coordinates(const FqMatrix& v) const { return v.select_cols(pivots_); }

FqMatrix complement_rows(const Subspace& base, const FqMatrix& extra) {
  EchelonBuilder eb(extra.field_ptr(), extra.cols());
  for (int r = 0; r < base.dim(); ++r) eb.add(base.basis().row(r));
  std::vector<int> keep;
  for (int r = 0; r < extra.rows(); ++r)
    if (eb.add(extra.row(r))) keep.push_back(r);
  return extra.select_rows(keep);
}

EchelonBuilder::EchelonBuilder(FieldPtr field, int ambient, bool track)
    : field_(std::move(field)), ambient_(ambient), track_(track) {}

std::vector<Fe> EchelonBuilder::reduce(std::span<const Fe> v, std::vector<Fe>* coeffs) const {
  const Field& f = *field_;
  std::vector<Fe> w(v.begin(), v.end());
  if (coeffs) coeffs->assign(rows_.size(), 0);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Fe s = w[pivots_[k]];
    if (!s) continue;
    const Fe* mrow = f.mul_row(f.neg(s));
    const auto& row = rows_[k];
    for (int j = pivots_[k]; j < ambient_; ++j) w[j] = f.add(w[j], mrow[row[j]]);
    // the earlier columns of row k vanish at earlier pivots only; finish the sweep
    for (int j = 0; j < pivots_[k]; ++j) w[j] = f.add(w[j], mrow[row[j]]);
    if (coeffs) (*coeffs)[k] = s;
  }
  return w;
}

bool EchelonBuilder::contains(std::span<const Fe> v) const {
  auto w = reduce(v, nullptr);
  for (Fe x : w)
    if (x) return false;
  return true;
}

bool EchelonBuilder::add(std::span<const Fe> v) {
  if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("EchelonBuilder: length mismatch");
  const Field& f = *field_;
  std::vector<Fe> c;
  auto w = reduce(v, track_ ? &c : nullptr);
  int piv = -1;
  for (int j = 0; j < ambient_; ++j)
    if (w[j]) {
      piv = j;
      break;
    }
  if (piv < 0) return false;
  const Fe inv = f.inv(w[piv]);
  const Fe* srow = f.mul_row(inv);
  for (auto& x : w) x = srow[x];
  if (track_) {
    // w_old = added_new - sum_k c_k rows_k  =>  transform of new row
    const std::size_t n = rows_.size();
    std::vector<Fe> t(n + 1, 0);
    t[n] = 1;
    for (std::size_t k = 0; k < n; ++k) {
      if (!c[k]) continue;
      const Fe* mrow = f.mul_row(f.neg(c[k]));
      for (std::size_t j = 0; j < transform_[k].size(); ++j) t[j] = f.add(t[j], mrow[transform_[k][j]]);
    }
    for (auto& x : t) x = srow[x];
    for (auto& tr : transform_) tr.push_back(0);
    transform_.push_back(std::move(t));
  }
  // keep earlier rows zero at the new pivot
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Fe s = rows_[k][piv];
    if (!s) continue;
    const Fe* mrow = f.mul_row(f.neg(s));
    for (int j = 0; j < ambient_; ++j) rows_[k][j] = f.add(rows_[k][j], mrow[w[j]]);
    if (track_) {
      auto& tk = transform_[k];
      const auto& tn = transform_.back();
      for (std::size_t j = 0; j < tk.size(); ++j) tk[j] = f.add(tk[j], mrow[tn[j]]);
    }
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(piv);
  return true;
}

std::optional<std::vector<Fe>> EchelonBuilder::express(std::span<const Fe> v) const {
  if (!track_) throw std::logic_error("EchelonBuilder::express requires tracking");
  const Field& f = *field_;
  std::vector<Fe> c;
  auto w = reduce(v, &c);
  for (Fe x : w)
    if (x) return std::nullopt;
  const std::size_t n = rows_.size();
  std::vector<Fe> out(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    if (!c[k]) continue;
    const Fe* mrow = f.mul_row(c[k]);
    for (std::size_t j = 0; j < n; ++j) out[j] = f.add(out[j], mrow[transform_[k][j]]);
  }
  return out;
}

FqMatrix EchelonBuilder::rows() const {
  FqMatrix m(field_, size(), ambient_);
  for (int r = 0; r < size(); ++r)
    for (int j = 0; j < ambient_; ++j) m(r, j) = rows_[r][j];
  return m;
}

}  // namespace ppcan
