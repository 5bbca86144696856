#include <random>

#include "doctest.h"
#include "ppcan/cyclotomic.hpp"
#include "ppcan/dense_matrix.hpp"
#include "ppcan/fq_matrix.hpp"
#include "ppcan/kernels.hpp"

using namespace ppcan;

namespace {

FqMatrix random_matrix(const FieldPtr& f, int r, int c, std::mt19937& rng) {
  FqMatrix m(f, r, c);
  std::uniform_int_distribution<int> d(0, f->order() - 1);
  for (auto& x : m.data()) x = static_cast<Fe>(d(rng));
  return m;
}

}  // namespace

TEST_CASE("field sizes") {
  auto f = Field::build(3, 4);
  CHECK(f->order() == 9);
  CHECK(f->degree() == 2);
  CHECK(Field::build(2, 1)->order() == 2);
  auto f4 = Field::build(2, 3);
  CHECK(f4->order() == 4);
  CHECK(f4->degree() == 2);
  CHECK(Field::build(2, 7)->order() == 8);
  CHECK(Field::build(3, 8)->order() == 9);
}

TEST_CASE("field axioms by exhaustion") {
  for (auto [p, m] : {std::pair{2, 3}, {3, 4}, {2, 7}, {5, 4}, {3, 13}}) {
    auto f = Field::build(p, m);
    const int q = f->order();
    for (int a = 0; a < q; ++a) {
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a) CHECK(f->mul(a, f->inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f->mul(a, b) == f->mul(b, a));
        for (int c = 0; c < q; c += 3) CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      }
    }
    const Fe g = f->root_generator();
    CHECK(f->multiplicative_order(g) == m);
    for (int x = 1; x < g; ++x) CHECK(f->multiplicative_order(x) != m);
  }
}

TEST_CASE("roots of unity and logs") {
  auto f = Field::build(3, 4);
  auto r4 = f->roots_of_unity(4);
  CHECK(r4.size() == 4);
  for (std::size_t j = 0; j < r4.size(); ++j) CHECK(f->root_log(r4[j]) == static_cast<int>(j));
  CHECK(f->root_log(1) == 0);
  CHECK(f->root_log(f->neg(1)) == 2);
}

TEST_CASE("rank, kernel, inverse over F_9") {
  auto f = Field::build(3, 4);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = 1 + trial % 9, c = 1 + (trial * 5) % 11;
    FqMatrix a = random_matrix(f, r, c, rng);
    if (trial % 3 == 0 && r > 1)
      for (int j = 0; j < c; ++j) a(r - 1, j) = a(0, j);
    const int rk = rank(a);
    FqMatrix k = right_kernel(a);
    CHECK(rk + k.rows() == c);
    if (k.rows()) CHECK((a * k.transpose()).is_zero());
    FqMatrix lk = left_kernel(a);
    CHECK(rk + lk.rows() == r);
    if (lk.rows()) CHECK((lk * a).is_zero());
  }
  FqMatrix z(f, 3, 3);
  CHECK(right_kernel(z).rows() == 3);
  CHECK(right_kernel(FqMatrix::identity(f, 4)).rows() == 0);
  int inverted = 0;
  for (int trial = 0; trial < 10; ++trial) {
    FqMatrix a = random_matrix(f, 10, 10, rng);
    auto inv = inverse(a);
    CHECK(inv.has_value() == (rank(a) == 10));
    if (inv) {
      CHECK((a * *inv).is_identity());
      CHECK((*inv * a).is_identity());
      ++inverted;
    }
  }
  CHECK(inverted > 0);
}

TEST_CASE("solve_left returns a solution and the kernel") {
  auto f = Field::build(2, 3);
  std::mt19937 rng(11);
  FqMatrix a = random_matrix(f, 6, 4, rng);
  FqMatrix x = random_matrix(f, 2, 6, rng);
  FqMatrix b = x * a;
  auto sol = solve_left(a, b);
  REQUIRE(sol.has_value());
  CHECK(sol->particular * a == b);
  CHECK(sol->kernel.rows() + rank(a) == 6);
  FqMatrix bad(f, 1, 4);
  FqMatrix ident = FqMatrix::identity(f, 4);
  FqMatrix zero(f, 4, 4);
  bad(0, 0) = 1;
  CHECK_FALSE(solve_left(zero, bad).has_value());
  CHECK(solve_left(ident, bad)->particular == bad);
}

TEST_CASE("echelon builder expresses vectors in added order") {
  auto f = Field::build(3, 4);
  std::mt19937 rng(3);
  FqMatrix a = random_matrix(f, 4, 7, rng);
  EchelonBuilder eb(f, 7, true);
  std::vector<int> added;
  for (int i = 0; i < 4; ++i)
    if (eb.add(a.row(i))) added.push_back(i);
  FqMatrix comb = random_matrix(f, 1, 4, rng);
  FqMatrix v = comb * a;
  auto coeffs = eb.express(v.row(0));
  REQUIRE(coeffs.has_value());
  FqMatrix back(f, 1, 7);
  for (std::size_t k = 0; k < added.size(); ++k)
    for (int j = 0; j < 7; ++j) back(0, j) = f->add(back(0, j), f->mul((*coeffs)[k], a(added[k], j)));
  CHECK(back == v);
}

TEST_CASE("serial and parallel kernels agree") {
  auto f = Field::build(3, 8);
  std::mt19937 rng(5);
  for (int n : {5, 33, 80}) {
    FqMatrix a = random_matrix(f, n, n + 3, rng), b = random_matrix(f, n + 3, n, rng);
    std::vector<Fe> c1(n * n), c2(n * n);
    kernels::serial::multiply(*f, {a.data().data(), n, n + 3}, {b.data().data(), n + 3, n}, c1.data());
    kernels::omp::multiply(*f, {a.data().data(), n, n + 3}, {b.data().data(), n + 3, n}, c2.data());
    CHECK(c1 == c2);
    std::vector<Fe> r1 = c1, r2 = c1;
    for (int j = 0; j < n; ++j) r1[n * (n - 1) + j] = r2[n * (n - 1) + j] = r1[j];
    auto p1 = kernels::serial::rref(*f, r1.data(), n, n);
    auto p2 = kernels::omp::rref(*f, r2.data(), n, n);
    CHECK(p1 == p2);
    CHECK(r1 == r2);
  }
}

TEST_CASE("cyclotomic arithmetic") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  for (int m : {1, 2, 3, 4, 5, 6, 8, 12, 24}) {
    CHECK(static_cast<int>(cyclotomic_polynomial(m).size()) == euler_phi(m) + 1);
    Cyc z = Cyc::zeta(m, 1);
    Cyc acc(m, {Rational(0)});
    Cyc pw = Cyc(m, {Rational(1)});
    for (long c : cyclotomic_polynomial(m)) {
      acc += pw * Cyc(c);
      pw *= z;
    }
    CHECK(acc.is_zero());
    CHECK(abs(z.norm()) == 1);
    Cyc x = Cyc::zeta(m, 1) + Cyc(2L);
    CHECK(x * x.inverse() == Cyc(1L));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) CHECK(Cyc::zeta(m, a) * Cyc::zeta(m, b) == Cyc::zeta(m, a + b));
  }
  CHECK(Cyc::zeta(4, 2) == Cyc(-1L));
  CHECK(Cyc(Rational(2, 3)).str() == "2/3");
}

TEST_CASE("rational dense solve and inverse") {
  RationalMatrix a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 1;
  a(1, 0) = 0;
  a(1, 1) = 1;
  auto inv = a.inverse();
  REQUIRE(inv.has_value());
  CHECK(a * *inv == RationalMatrix::identity(2));
  CHECK((*inv)(0, 0) == Rational(1, 2));
  CHECK((*inv)(0, 1) == Rational(-1, 2));
  CHECK(a.determinant() == 2);
  CycMatrix c(1, 1);
  c(0, 0) = Cyc::zeta(3, 1);
  CHECK(c.inverse().value()(0, 0) == Cyc::zeta(3, 2));
}
