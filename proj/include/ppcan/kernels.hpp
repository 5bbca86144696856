#pragma once

#include <vector>

#include "ppcan/field.hpp"

// Inner loops of the F_q linear algebra. The serial versions are the
// reference; the OpenMP versions must agree with them entry for entry.

namespace ppcan::kernels {

struct View {
  const Fe* data;
  int rows, cols;
};

namespace serial {
/// c = a * b (c has a.rows x b.cols entries, overwritten).
void multiply(const Field& f, View a, View b, Fe* c);
/// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(const Field& f, Fe* data, int rows, int cols);
}  // namespace serial

namespace omp {
void multiply(const Field& f, View a, View b, Fe* c);
std::vector<int> rref(const Field& f, Fe* data, int rows, int cols);
}  // namespace omp

/// Work threshold (multiply-adds) above which the dispatchers use OpenMP.
inline constexpr long long kParallelThreshold = 1LL << 18;

void multiply(const Field& f, View a, View b, Fe* c);
std::vector<int> rref(const Field& f, Fe* data, int rows, int cols);

bool have_openmp();

}  // namespace ppcan::kernels
