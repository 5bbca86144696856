#include "ppcan/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "ppcan/dense_matrix.hpp"

namespace ppcan {

namespace {

std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Exact quotient a / b for monic b.
std::vector<long> poly_div_exact(std::vector<long> a, const std::vector<long>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<long> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const long lead = a[i];
    q[i - db] = lead;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= lead * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) throw std::logic_error("cyclotomic division not exact");
  return q;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int m) {
  static std::map<int, std::vector<long>> cache;
  static std::mutex mu;
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  std::lock_guard<std::mutex> lock(mu);
  // divisors in increasing order: every divisor of d is handled before d
  for (int d = 1; d <= m; ++d) {
    if (m % d || cache.count(d)) continue;
    std::vector<long> num(d + 1, 0);
    num[0] = -1;
    num[d] = 1;
    std::vector<long> den{1};
    for (int e = 1; e < d; ++e)
      if (d % e == 0) den = poly_mul(den, cache.at(e));
    cache.emplace(d, poly_div_exact(num, den));
  }
  return cache.at(m);
}

int euler_phi(int m) {
  int r = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

Cyc::Cyc(int m, std::vector<Rational> coeffs) : m_(m) {
  if (m < 1) throw std::invalid_argument("Cyc: conductor must be positive");
  reduce_from(std::move(coeffs));
}

void Cyc::reduce_from(std::vector<Rational> full) {
  const auto& phi = cyclotomic_polynomial(m_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = full.size(); i-- > deg;) {
    const Rational lead = full[i];
    if (sgn(lead) == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) full[i - deg + j] -= lead * phi[j];
    full[i] = 0;
  }
  full.resize(deg, Rational(0));
  c_ = std::move(full);
}

Cyc Cyc::zeta(int m, long j) {
  j %= m;
  if (j < 0) j += m;
  std::vector<Rational> full(static_cast<std::size_t>(j) + 1, Rational(0));
  full[j] = 1;
  return Cyc(m, std::move(full));
}

bool Cyc::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Cyc Cyc::promoted(int m) const {
  if (m == m_) return *this;
  if (m_ != 1) throw std::invalid_argument("Cyc: cannot move between different cyclotomic fields");
  return Cyc(m, std::vector<Rational>{c_[0]});
}

void Cyc::unify(Cyc& a, Cyc& b) {
  if (a.m_ == b.m_) return;
  if (a.m_ == 1)
    a = a.promoted(b.m_);
  else if (b.m_ == 1)
    b = b.promoted(a.m_);
  else
    throw std::invalid_argument("Cyc: mixed conductors");
}

Cyc& Cyc::operator+=(const Cyc& o) {
  Cyc b = o;
  unify(*this, b);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  Cyc b = o;
  unify(*this, b);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  if (o.m_ == 1 || m_ == 1) {
    if (o.m_ == 1) {
      for (auto& x : c_) x *= o.c_[0];
      return *this;
    }
    Rational s = c_[0];
    *this = o;
    for (auto& x : c_) x *= s;
    return *this;
  }
  Cyc b = o;
  unify(*this, b);
  std::vector<Rational> full(c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) full[i + j] += c_[i] * b.c_[j];
  }
  reduce_from(std::move(full));
  return *this;
}

Cyc& Cyc::operator/=(const Cyc& o) { return *this *= o.inverse(); }

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("Cyc: inverse of zero");
  if (m_ == 1) return Cyc(Rational(1) / c_[0]);
  if (is_rational()) return Cyc(m_, {Rational(1) / c_[0]});
  const int n = static_cast<int>(c_.size());
  // column j holds (this * z^j)
  RationalMatrix mult(n, n);
  for (int j = 0; j < n; ++j) {
    Cyc col = *this * Cyc::zeta(m_, j);
    for (int i = 0; i < n; ++i) mult(i, j) = col.c_[i];
  }
  std::vector<Rational> e(n, Rational(0));
  e[0] = 1;
  auto x = mult.solve(e);
  if (!x) throw std::logic_error("Cyc: multiplication matrix singular");
  return Cyc(m_, *x);
}

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  Cyc x = a, y = b;
  Cyc::unify(x, y);
  return x.c_ == y.c_;
}

Rational Cyc::norm() const {
  if (m_ == 1) return c_[0];
  const int n = static_cast<int>(c_.size());
  RationalMatrix mult(n, n);
  for (int j = 0; j < n; ++j) {
    Cyc col = *this * Cyc::zeta(m_, j);
    for (int i = 0; i < n; ++i) mult(i, j) = col.c_[i];
  }
  return mult.determinant();
}

std::string Cyc::str() const {
  if (is_rational()) return to_string(c_[0]);
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << to_string(c_[i]);
  }
  os << ']';
  return os.str();
}

bool lex_less(const Cyc& a, const Cyc& b) {
  Cyc x = a, y = b;
  if (x.m_ != y.m_) Cyc::unify(x, y);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] < y.c_[i]) return true;
    if (y.c_[i] < x.c_[i]) return false;
  }
  return false;
}

}  // namespace ppcan
