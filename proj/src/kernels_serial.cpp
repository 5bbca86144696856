#include <algorithm>
#include <cstring>

#include "ppcan/kernels.hpp"

namespace ppcan::kernels::serial {

void multiply(const Field& f, View a, View b, Fe* c) {
  const int n = a.rows, inner = a.cols, m = b.cols;
  std::fill(c, c + static_cast<std::size_t>(n) * m, Fe{0});
  for (int i = 0; i < n; ++i) {
    Fe* crow = c + static_cast<std::size_t>(i) * m;
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
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
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

}  // namespace ppcan::kernels::serial
