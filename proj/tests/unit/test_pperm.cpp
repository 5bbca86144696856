#include "doctest.h"
#include "ppcan/named_groups.hpp"
#include "ppcan/pperm_ring.hpp"

using namespace ppcan;

namespace {

int find_label(const PPermRing& t, const std::string& label) {
  for (int i = 0; i < t.rank(); ++i)
    if (t.basis()[i].label == label) return i;
  return -1;
}

}  // namespace

TEST_CASE("T(C2) at p = 2") {
  Session s(named_group("C2"), Config{2});
  const PPermRing& t = s.pperm(s.ambient());
  REQUIRE(t.rank() == 2);
  CHECK(t.ex_rank() == 2);
  CHECK(t.basis()[0].module.dim() == 2);
  CHECK(t.basis()[1].module.dim() == 1);
  CHECK(t.one() == IntVector{0, 1});
  CHECK(t.product(0, 0) == IntVector{2, 0});
  CHECK(t.product(0, 1) == IntVector{1, 0});
  CHECK(t.coordinates(regular_module(s.ambient(), s.field())) == IntVector{1, 0});

  const CycMatrix& sm = t.species_matrix();
  REQUIRE(sm.rows() == 2);
  CHECK(sm(0, 0) == Cyc(2L));
  CHECK(sm(0, 1) == Cyc(1L));
  CHECK(sm(1, 0) == Cyc(0L));
  CHECK(sm(1, 1) == Cyc(1L));
  // inverse of [[2,1],[0,1]] has columns (1/2, 0) and (-1/2, 1)
  const auto& e = t.idempotents();
  CHECK(e[0][0] == Cyc(Rational(1, 2)));
  CHECK(e[0][1] == Cyc(0L));
  CHECK(e[1][0] == Cyc(Rational(-1, 2)));
  CHECK(e[1][1] == Cyc(1L));
}

TEST_CASE("T(SL23) at p = 3") {
  Session s(named_group("SL23"), Config{3});
  GroupPtr g = s.ambient();
  const PPermRing& t = s.pperm(g);
  const Lattice& lat = s.lattice(g);
  CHECK(t.rank() == 5);
  CHECK(t.ex_rank() == 4);
  int non_ex = 0, y = -1;
  for (int i = 0; i < t.rank(); ++i)
    if (!t.basis()[i].exprojective) {
      ++non_ex;
      y = i;
    }
  REQUIRE(non_ex == 1);
  CHECK(lat.sub(t.basis()[y].p_sub).order() == 3);
  CHECK(s.vertex(t.basis()[y].module) == t.basis()[y].p_sub);
  CHECK(t.basis()[y].module.dim() > 1);
  // the QPairs: three at K = 1 and the trivial module at K = G
  int at_one = 0, at_g = 0;
  for (const auto& q : t.qpairs()) {
    at_one += q.k == lat.trivial();
    at_g += q.k == lat.whole();
  }
  CHECK(at_one == 3);
  CHECK(at_g == 1);
  CHECK(t.pi(t.one()) == IntVector{0, 0, 0, 1});
  IntVector unit_y(t.rank(), 0);
  unit_y[y] = 1;
  CHECK(t.pi(unit_y) == IntVector(4, 0));

  // Y(C3) is 1-dimensional
  const auto& sp = t.species();
  const CycMatrix& sm = t.species_matrix();
  for (std::size_t k = 0; k < sp.size(); ++k)
    if (sp[k].p_sub == t.basis()[y].p_sub && sp[k].s == 0) CHECK(sm(static_cast<int>(k), y) == Cyc(1L));

  // G/C6 decomposes into basis modules with matching dimension
  int c6 = -1;
  for (int i = 0; i < lat.size(); ++i)
    if (lat.sub(i).order() == 6) c6 = i;
  IntVector x = t.coordinates(perm_module(g, s.field(), lat.sub(c6).elems));
  int d = 0;
  for (int i = 0; i < t.rank(); ++i) d += x[i] * t.basis()[i].module.dim();
  CHECK(d == 4);
}

TEST_CASE("species are ring homomorphisms and idempotents are orthogonal") {
  for (auto [name, p] : std::vector<std::pair<const char*, int>>{{"S3", 2}, {"S3", 3}, {"A4", 2}, {"C6", 2}, {"D8", 2}}) {
    CAPTURE(name);
    CAPTURE(p);
    Session s(named_group(name), Config{p});
    const PPermRing& t = s.pperm(s.ambient());
    const CycMatrix& sm = t.species_matrix();
    REQUIRE(sm.rows() == t.rank());
    for (int i = 0; i < t.rank(); ++i)
      for (int j = i; j < t.rank(); ++j) {
        const IntVector& c = t.product(i, j);
        for (int k = 0; k < sm.rows(); ++k) {
          Cyc lhs(0L);
          for (int b = 0; b < t.rank(); ++b) lhs = lhs + sm(k, b) * Cyc(c[b]);
          CHECK(lhs == sm(k, i) * sm(k, j));
        }
      }
    // trivial module has every species 1
    const IntVector one = t.one();
    for (int k = 0; k < sm.rows(); ++k) {
      Cyc v(0L);
      for (int b = 0; b < t.rank(); ++b) v = v + sm(k, b) * Cyc(one[b]);
      CHECK(v == Cyc(1L));
    }
    // exprojectives closed under products
    for (int i = 0; i < t.rank(); ++i)
      for (int j = 0; j < t.rank(); ++j)
        if (t.basis()[i].exprojective && t.basis()[j].exprojective) CHECK(t.exprojective_supported(t.product(i, j)));
  }
}

TEST_CASE("induction and restriction matrices") {
  Session s(named_group("S3"), Config{3});
  GroupPtr g = s.ambient();
  const PPermRing& t = s.pperm(g);
  const Lattice& lat = s.lattice(g);
  GroupPtr one = s.subgroup(g, lat.trivial());
  const IntMatrix& ind = t.induction_matrix(one);
  REQUIRE(ind.size() == 1);
  CHECK(t.coordinates(regular_module(g, s.field())) == ind[0]);
  const IntMatrix& res = t.pullback_matrix(identity_hom(g));
  for (int i = 0; i < t.rank(); ++i)
    for (int j = 0; j < t.rank(); ++j) CHECK(res[i][j] == (i == j));
  CHECK(find_label(t, t.basis()[0].label) == 0);
}
