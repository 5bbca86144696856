#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ppcan {

/// An element of F_q, encoded as the integer sum c_i p^i of its coefficients
/// in the polynomial basis 1, x, ..., x^{k-1}.
using Fe = std::uint16_t;

/// The finite field F_q = F_p[x]/(f), q = p^k, sized so that the m-th roots
/// of unity lie in F_q. Arithmetic is table driven; q is capped at 1024.
class Field {
 public:
  static constexpr int kMaxOrder = 1024;

  /// Smallest k with m | p^k - 1, with the first irreducible monic f of
  /// degree k in increasing coefficient order.
  static std::shared_ptr<const Field> build(int p, int m);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int order() const { return q_; }
  int root_order() const { return m_; }
  /// Coefficients c_0..c_k of the defining polynomial (c_k = 1).
  const std::vector<int>& modulus() const { return modulus_; }

  Fe add(Fe a, Fe b) const { return add_[static_cast<std::size_t>(a) * q_ + b]; }
  Fe neg(Fe a) const { return neg_[a]; }
  Fe sub(Fe a, Fe b) const { return add(a, neg_[b]); }
  Fe mul(Fe a, Fe b) const { return mul_[static_cast<std::size_t>(a) * q_ + b]; }
  Fe inv(Fe a) const;
  Fe pow(Fe a, long long e) const;
  Fe from_int(long long v) const;
  /// Pointer to the row a*(.) of the multiplication table.
  const Fe* mul_row(Fe a) const { return mul_.data() + static_cast<std::size_t>(a) * q_; }
  const Fe* add_row(Fe a) const { return add_.data() + static_cast<std::size_t>(a) * q_; }

  int multiplicative_order(Fe a) const;
  /// Least element (by encoding) of multiplicative order exactly m.
  Fe root_generator() const { return root_gen_; }
  /// The j in [0, m) with a = root_generator()^j; throws unless a^m = 1.
  int root_log(Fe a) const;
  /// All d-th roots of unity for d | m, in increasing exponent order.
  std::vector<Fe> roots_of_unity(int d) const;

  std::string to_string(Fe a) const;
  std::string describe() const;

 private:
  Field() = default;

  int p_ = 0, k_ = 0, q_ = 0, m_ = 1;
  std::vector<int> modulus_;
  std::vector<Fe> add_, mul_, neg_, inv_;
  std::vector<int> log_;
  std::vector<Fe> exp_;
  Fe primitive_ = 1;
  Fe root_gen_ = 1;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(long long n);

}  // namespace ppcan
