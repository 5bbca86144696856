#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ppcan/kernels.hpp"

namespace ppcan::kernels {

namespace omp {

void multiply(const Field& f, View a, View b, Fe* c) {
  const int n = a.rows, inner = a.cols, m = b.cols;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    Fe* crow = c + static_cast<std::size_t>(i) * m;
    std::fill(crow, crow + m, Fe{0});
    for (int k = 0; k < inner; ++k) {
      const Fe s = a.data[static_cast<std::size_t>(i) * inner + k];
      if (s == 0) continue;
      const Fe* mrow = f.mul_row(s);
      const Fe* brow = b.data + static_cast<std::size_t>(k) * m;
      for (int j = 0; j < m; ++j) crow[j] = f.add(crow[j], mrow[brow[j]]);
    }
  }
}

std::vector<int> rref(const Field& f, Fe* data, int rows, int cols) {
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (data[static_cast<std::size_t>(i) * cols + col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    Fe* prow = data + static_cast<std::size_t>(r) * cols;
    if (piv != r) std::swap_ranges(prow, prow + cols, data + static_cast<std::size_t>(piv) * cols);
    const Fe* scale = f.mul_row(f.inv(prow[col]));
    for (int j = col; j < cols; ++j) prow[j] = scale[prow[j]];
    const int pr = r;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < rows; ++i) {
      if (i == pr) continue;
      Fe* row = data + static_cast<std::size_t>(i) * cols;
      const Fe s = row[col];
      if (s == 0) continue;
      const Fe* mrow = f.mul_row(f.neg(s));
      for (int j = col; j < cols; ++j) row[j] = f.add(row[j], mrow[prow[j]]);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace omp

bool have_openmp() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

void multiply(const Field& f, View a, View b, Fe* c) {
  const long long work = static_cast<long long>(a.rows) * a.cols * b.cols;
  if (have_openmp() && work >= kParallelThreshold)
    omp::multiply(f, a, b, c);
  else
    serial::multiply(f, a, b, c);
}

std::vector<int> rref(const Field& f, Fe* data, int rows, int cols) {
  const long long work = static_cast<long long>(rows) * rows * cols;
  if (have_openmp() && work >= kParallelThreshold) return omp::rref(f, data, rows, cols);
  return serial::rref(f, data, rows, cols);
}

}  // namespace ppcan::kernels
