#include "ppcan/field.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ppcan {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<int>;  // low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly digits(int v, int p, int k) {
  Poly d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

int encode(const Poly& d, int p) {
  int v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

bool irreducible(const Poly& f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int c = 0; c < count; ++c) {
      Poly g = digits(c, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::shared_ptr<const Field> Field::build(int p, int m) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (m < 1 || std::gcd(p, m) != 1)
    throw std::invalid_argument("root order must be positive and prime to p");

  int k = 1;
  long long q = p;
  while ((q - 1) % m != 0) {
    ++k;
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("required field order exceeds 1024");
  }
  if (q > kMaxOrder) throw std::invalid_argument("required field order exceeds 1024");

  auto F = std::shared_ptr<Field>(new Field());
  F->p_ = p;
  F->k_ = k;
  F->q_ = static_cast<int>(q);
  F->m_ = m;

  for (int c = 0; c < F->q_; ++c) {
    Poly f = digits(c, p, k);
    f.push_back(1);
    if (irreducible(f, p)) {
      F->modulus_ = f;
      break;
    }
  }

  const int n = F->q_;
  F->add_.assign(static_cast<std::size_t>(n) * n, 0);
  F->mul_.assign(static_cast<std::size_t>(n) * n, 0);
  F->neg_.assign(n, 0);
  std::vector<Poly> polys(n);
  for (int a = 0; a < n; ++a) polys[a] = digits(a, p, k);
  for (int a = 0; a < n; ++a) {
    Poly na(k);
    for (int i = 0; i < k; ++i) na[i] = (p - polys[a][i]) % p;
    F->neg_[a] = static_cast<Fe>(encode(na, p));
    for (int b = 0; b < n; ++b) {
      Poly s(k), prod(2 * k, 0);
      for (int i = 0; i < k; ++i) s[i] = (polys[a][i] + polys[b][i]) % p;
      F->add_[static_cast<std::size_t>(a) * n + b] = static_cast<Fe>(encode(s, p));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + polys[a][i] * polys[b][j]) % p;
      Poly r = poly_mod(prod, F->modulus_, p);
      r.resize(k, 0);
      F->mul_[static_cast<std::size_t>(a) * n + b] = static_cast<Fe>(encode(r, p));
    }
  }

  // log/exp tables from the least primitive element
  for (int a = 1; a < n; ++a) {
    if (F->multiplicative_order(static_cast<Fe>(a)) == n - 1) {
      F->primitive_ = static_cast<Fe>(a);
      break;
    }
  }
  F->log_.assign(n, -1);
  F->exp_.assign(2 * (n - 1), 0);
  Fe x = 1;
  for (int e = 0; e < n - 1; ++e) {
    F->exp_[e] = x;
    F->exp_[e + n - 1] = x;
    F->log_[x] = e;
    x = F->mul(x, F->primitive_);
  }
  F->inv_.assign(n, 0);
  for (int a = 1; a < n; ++a) F->inv_[a] = F->exp_[(n - 1 - F->log_[a]) % (n - 1)];

  for (int a = 1; a < n; ++a) {
    if (F->multiplicative_order(static_cast<Fe>(a)) == m) {
      F->root_gen_ = static_cast<Fe>(a);
      break;
    }
  }
  return F;
}

Fe Field::inv(Fe a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_q");
  return inv_[a];
}

Fe Field::pow(Fe a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Fe r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Fe Field::from_int(long long v) const {
  v %= p_;
  if (v < 0) v += p_;
  return static_cast<Fe>(v);
}

int Field::multiplicative_order(Fe a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  Fe x = a;
  int k = 1;
  while (x != 1) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

int Field::root_log(Fe a) const {
  if (a == 0 || pow(a, m_) != 1) throw std::domain_error("element is not an m-th root of unity");
  Fe x = 1;
  for (int j = 0; j < m_; ++j) {
    if (x == a) return j;
    x = mul(x, root_gen_);
  }
  throw std::logic_error("root_log: generator does not reach element");
}

std::vector<Fe> Field::roots_of_unity(int d) const {
  if (d < 1 || m_ % d != 0) throw std::invalid_argument("d must divide the root order");
  std::vector<Fe> out;
  const Fe w = pow(root_gen_, m_ / d);
  Fe x = 1;
  for (int j = 0; j < d; ++j) {
    out.push_back(x);
    x = mul(x, w);
  }
  return out;
}

std::string Field::to_string(Fe a) const {
  if (k_ == 1) return std::to_string(a);
  std::ostringstream os;
  os << '[';
  int v = a;
  for (int i = 0; i < k_; ++i) {
    if (i) os << ',';
    os << v % p_;
    v /= p_;
  }
  os << ']';
  return os.str();
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << q_ << " = F_" << p_ << "[x]/(";
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    if (modulus_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || modulus_[i] != 1) os << modulus_[i];
    if (i > 0) os << "x";
    if (i > 1) os << "^" << i;
  }
  os << ")";
  return os.str();
}

}  // namespace ppcan
