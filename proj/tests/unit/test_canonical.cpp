#include "doctest.h"
#include "ppcan/canonical.hpp"
#include "ppcan/named_groups.hpp"

using namespace ppcan;

namespace {

RationalVector unit(int n, int i) {
  RationalVector v(n);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("cofixed ring of C2 at p = 2") {
  Session s(named_group("C2"), Config{2});
  const CofixedRing& r = s.cofixed(s.ambient());
  const PPermRing& t = r.top();
  REQUIRE(r.rank() == 3);
  CHECK(r.k_classes().size() == 3);
  CHECK(r.basis()[0].label == "[1,(1,1a)]");
  CHECK(r.basis()[1].label == "[C2,(1,2a)]");
  CHECK(r.basis()[2].label == "[C2,(C2,1a)]");
  const int whole = s.lattice(s.ambient()).whole();
  for (int i = 0; i < t.rank(); ++i) {
    CHECK(r.lin(r.can_basis(i)) == unit(t.rank(), i));
    CHECK(r.can_basis(i) == r.embed(whole, unit(t.ex_rank(), t.basis()[i].qpair)));
  }
  CHECK(r.identity() == unit(3, 2));
  // [1,F]^2 = 2[1,F]
  CHECK(r.product(0, 0) == RationalVector{2, 0, 0});
  CHECK(r.lin(unit(3, 0)) == RationalVector{1, 0});
}

TEST_CASE("SL23 at p = 3: the 2/3 coefficient") {
  Session s(named_group("SL23"), Config{3});
  const CofixedRing& r = s.cofixed(s.ambient());
  const PPermRing& t = r.top();
  int y = -1;
  for (int i = 0; i < t.rank(); ++i)
    if (!t.basis()[i].exprojective) y = i;
  REQUIRE(y >= 0);
  const RationalVector& c = r.can_basis(y);
  bool found = false;
  for (int a = 0; a < r.rank(); ++a) {
    const RClass& b = r.basis()[a];
    if (b.u_label == "Q8" && b.k_label == "1" && b.f_label == "2a") {
      CHECK(c[a] == Rational(2, 3));
      found = true;
    }
    CHECK(denominator_is_power_of(c[a], 3));
  }
  CHECK(found);
  CHECK(r.lin(c) == unit(t.rank(), y));
  CHECK(r.can(unit(t.rank(), y), true) == c);
}

TEST_CASE("can commutes with restriction and automorphisms") {
  for (auto [name, p] : std::vector<std::pair<const char*, int>>{{"S3", 2}, {"S3", 3}, {"C2xC2", 2}, {"D8", 2}}) {
    CAPTURE(name);
    Session s(named_group(name), Config{p});
    GroupPtr g = s.ambient();
    const CofixedRing& r = s.cofixed(g);
    const PPermRing& t = r.top();
    const Lattice& lat = s.lattice(g);
    for (int c = 0; c < lat.num_classes(); ++c) {
      GroupPtr h = s.subgroup(g, lat.class_rep(c));
      const CofixedRing& rh = s.cofixed(h);
      const IntMatrix& res = t.pullback_matrix(s.inclusion(h, g));
      for (int i = 0; i < t.rank(); ++i)
        CHECK(r.restrict_to(rh, r.can_basis(i)) == rh.can(to_rational(res[i])));
    }
    for (const Hom& a : automorphism_generators(g)) {
      const IntMatrix& iso = t.pullback_matrix(a);
      for (int i = 0; i < t.rank(); ++i) CHECK(r.isogate(a, r.can_basis(i)) == r.can(to_rational(iso[i])));
    }
    // ring axioms visible through lin
    for (int a = 0; a < r.rank(); ++a)
      for (int b = 0; b < r.rank(); ++b) {
        CHECK(r.product(a, b) == r.product(b, a));
        IntVector la(t.rank()), lb(t.rank());
        for (int j = 0; j < t.rank(); ++j) {
          la[j] = r.lin_matrix()[a][j];
          lb[j] = r.lin_matrix()[b][j];
        }
        CHECK(r.lin(r.product(a, b)) == to_rational(t.multiply(la, lb)));
      }
  }
}

TEST_CASE("automorphisms") {
  CHECK(automorphism_generators(named_group("C2")).empty());
  auto gens = automorphism_generators(named_group("C2xC2"));
  CHECK(!gens.empty());
  for (const auto& h : gens) {
    CHECK(h.is_homomorphism());
    CHECK(h.is_injective());
  }
}
