#include "ppcan/eigen.hpp"

#include <stdexcept>

namespace ppcan {

std::vector<std::pair<Fe, int>> semisimple_eigenvalue_multiplicities(const FqMatrix& a, int d) {
  const Field& f = a.field();
  if (d < 1 || d % f.characteristic() == 0 || f.root_order() % d != 0)
    throw std::invalid_argument("eigenvalue order must divide the root order of the field");
  if (!a.power(d).is_identity()) throw std::invalid_argument("matrix does not satisfy A^d = I");
  const int n = a.rows();
  std::vector<std::pair<Fe, int>> out;
  int total = 0;
  for (Fe lambda : f.roots_of_unity(d)) {
    const int mult = n - rank(a - FqMatrix::scalar(a.field_ptr(), n, lambda));
    out.emplace_back(lambda, mult);
    total += mult;
  }
  if (total != n) throw std::logic_error("eigenvalue multiplicities do not add up");
  return out;
}

Cyc brauer_lift(const Field& f, Fe lambda) {
  if (lambda == 0) throw std::invalid_argument("brauer_lift of zero");
  const int m = f.root_order();
  const int j = f.root_log(lambda);
  if (m == 1) return Cyc(1L);
  return Cyc::zeta(m, j);
}

Cyc lifted_trace(const FqMatrix& a, int d) {
  const Field& f = a.field();
  Cyc sum(0L);
  for (auto [lambda, mult] : semisimple_eigenvalue_multiplicities(a, d))
    if (mult) sum += brauer_lift(f, lambda) * Cyc(static_cast<long>(mult));
  if (f.root_order() > 1) sum = sum.promoted(f.root_order());
  return sum;
}

}  // namespace ppcan
