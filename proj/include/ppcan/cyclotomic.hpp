#pragma once

#include <string>
#include <vector>

#include "ppcan/rational.hpp"

namespace ppcan {

/// Coefficients of the m-th cyclotomic polynomial, low degree first.
const std::vector<long>& cyclotomic_polynomial(int m);
int euler_phi(int m);

/// Element of Q(zeta_m), stored as coefficients of 1, z, ..., z^{phi(m)-1}
/// reduced modulo the m-th cyclotomic polynomial. m = 1 is the rationals;
/// mixed arithmetic promotes a rational operand to the other field.
class Cyc {
 public:
  Cyc() : m_(1), c_(1) {}
  Cyc(long v) : m_(1), c_(1, Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Cyc(const Rational& r) : m_(1), c_(1, r) {}  // NOLINT(google-explicit-constructor)
  Cyc(int m, std::vector<Rational> coeffs);
  /// zeta_m^j.
  static Cyc zeta(int m, long j);

  int conductor() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_part() const { return c_[0]; }
  /// The same number written in Q(zeta_m) (requires this to be rational or already in it).
  Cyc promoted(int m) const;

  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator/=(const Cyc& o);
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
  Cyc operator-() const;
  Cyc inverse() const;
  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  /// Norm down to Q (product of all Galois conjugates).
  Rational norm() const;
  /// "a" when rational, otherwise the coefficient vector "[c0,c1,...]".
  std::string str() const;
  /// Total order used for deterministic sorting.
  friend bool lex_less(const Cyc& a, const Cyc& b);

 private:
  static void unify(Cyc& a, Cyc& b);
  void reduce_from(std::vector<Rational> full);

  int m_;
  std::vector<Rational> c_;
};

using CycVector = std::vector<Cyc>;

}  // namespace ppcan
