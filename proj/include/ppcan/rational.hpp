#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ppcan {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<long long>;
/// Integer matrix stored as rows.
using IntMatrix = std::vector<IntVector>;

inline std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

/// True when the reduced denominator of r is a power of p (including 1).
inline bool denominator_is_power_of(const Rational& r, long p) {
  Integer d = r.get_den();
  while (d % p == 0) d /= p;
  return d == 1;
}

inline RationalVector to_rational(const IntVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

}  // namespace ppcan
