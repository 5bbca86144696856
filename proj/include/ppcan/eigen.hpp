#pragma once

#include <utility>
#include <vector>

#include "ppcan/cyclotomic.hpp"
#include "ppcan/fq_matrix.hpp"

namespace ppcan {

/// For A with A^d = I and d coprime to the characteristic: (lambda, dim ker(A - lambda I))
/// for each d-th root of unity lambda, in increasing exponent order. Throws if A^d != I.
std::vector<std::pair<Fe, int>> semisimple_eigenvalue_multiplicities(const FqMatrix& a, int d);

/// The fixed isomorphism from the m-th roots of unity of the field to those of
/// Q(zeta_m): root_generator()^j maps to zeta_m^j.
Cyc brauer_lift(const Field& f, Fe lambda);

/// Sum of the lifted eigenvalues of A (A^d = I).
Cyc lifted_trace(const FqMatrix& a, int d);

}  // namespace ppcan
