#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "ppcan/decompose.hpp"
#include "ppcan/eigen.hpp"
#include "ppcan/named_groups.hpp"
#include "ppcan/session.hpp"

using namespace ppcan;

namespace {

// Number of right cosets H x fixed by every element of P, by direct action on cosets.
int fixed_cosets(const Group& g, const std::vector<int>& h, const std::vector<int>& p) {
  std::set<std::vector<int>> cosets;
  for (int x = 0; x < g.order(); ++x) {
    std::vector<int> c;
    for (int y : h) c.push_back(g.mul(y, x));
    std::sort(c.begin(), c.end());
    cosets.insert(c);
  }
  int n = 0;
  for (const auto& c : cosets) {
    bool fixed = true;
    for (int t : p) {
      std::vector<int> d;
      for (int y : c) d.push_back(g.mul(y, t));
      std::sort(d.begin(), d.end());
      if (d != c) fixed = false;
    }
    n += fixed;
  }
  return n;
}

std::multiset<int> dims(const std::vector<Summand>& s) {
  std::multiset<int> out;
  for (const auto& x : s) out.insert(x.module.dim());
  return out;
}

}  // namespace

TEST_CASE("eigenvalue multiplicities") {
  auto f9 = Field::build(3, 4);
  auto id = FqMatrix::identity(f9, 3);
  auto m = semisimple_eigenvalue_multiplicities(id, 1);
  REQUIRE(m.size() == 1);
  CHECK(m[0].second == 3);

  FqMatrix d(f9, 2, 2);
  d(0, 0) = 1;
  d(1, 1) = f9->neg(1);
  auto md = semisimple_eigenvalue_multiplicities(d, 2);
  REQUIRE(md.size() == 2);
  CHECK(md[0].second == 1);
  CHECK(md[1].second == 1);

  auto f4 = Field::build(2, 3);
  FqMatrix c(f4, 3, 3);
  c(0, 1) = c(1, 2) = c(2, 0) = 1;
  auto mc = semisimple_eigenvalue_multiplicities(c, 3);
  REQUIRE(mc.size() == 3);
  for (auto& [l, k] : mc) CHECK(k == 1);
  CHECK(lifted_trace(c, 3) == Cyc(0L));
  CHECK_THROWS(semisimple_eigenvalue_multiplicities(c, 2));
}

TEST_CASE("brauer lift is multiplicative") {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 4}, {2, 3}, {3, 8}, {2, 7}, {5, 24}}) {
    auto f = Field::build(p, m);
    auto roots = f->roots_of_unity(m);
    REQUIRE(static_cast<int>(roots.size()) == m);
    std::set<std::string> images;
    for (Fe a : roots) {
      images.insert(brauer_lift(*f, a).str());
      for (Fe b : roots) CHECK(brauer_lift(*f, f->mul(a, b)) == brauer_lift(*f, a) * brauer_lift(*f, b));
    }
    CHECK(static_cast<int>(images.size()) == m);
  }
}

TEST_CASE("permutation modules and functors") {
  auto s3 = named_group("S3");
  auto f = Field::build(3, 2);
  Lattice lat(s3);
  for (int h = 0; h < lat.size(); ++h) {
    Module m = perm_module(s3, f, lat.sub(h).elems);
    CHECK(m.validate());
    CHECK(m.dim() * lat.sub(h).order() == 6);
  }
  CHECK(perm_module(s3, f, lat.sub(lat.whole()).elems).dim() == 1);

  Session s(s3, Config{3});
  for (int h = 0; h < lat.size(); ++h) {
    GroupPtr hg = s.subgroup(s3, h);
    Module ind = induce(trivial_module(hg, f), s.inclusion(hg, s3));
    CHECK(ind.validate());
    CHECK(is_isomorphic(ind, perm_module(s3, f, lat.sub(h).elems)));
  }
  // the 3-cycles fix no coset of C2: one orbit, so only the all-ones vector is fixed,
  // and it is a trace from the trivial subgroup
  int c2 = -1, c3 = -1;
  for (int i = 0; i < lat.size(); ++i) {
    if (lat.sub(i).order() == 2 && c2 < 0) c2 = i;
    if (lat.sub(i).order() == 3) c3 = i;
  }
  Module nat = perm_module(s3, s.field(), lat.sub(c2).elems);
  CHECK(fixed_points(nat, lat.sub(c3).elems).rows() == 1);
  CHECK(s.brauer_quotient_dim(nat, c3) == 0);
}

TEST_CASE("regular module of C2 in characteristic 2") {
  auto c2 = named_group("C2");
  auto f = Field::build(2, 1);
  Module reg = regular_module(c2, f);
  CHECK(fixed_points(reg, {0, 1}).rows() == 1);
  auto dec = decompose(reg);
  REQUIRE(dec.parts.size() == 1);
  CHECK(dec.parts[0].module.dim() == 2);
  CHECK(dec.parts[0].multiplicity == 1);
  CHECK_FALSE(is_isomorphic(reg, trivial_module(c2, f)));
  auto w = find_isomorphism(reg, reg);
  CHECK(w.has_value());
  CHECK(is_indecomposable(reg));
  CHECK(kernel_of_action(reg) == std::vector<int>{0});
  CHECK(kernel_of_action(trivial_module(c2, f)) == std::vector<int>{0, 1});
}

TEST_CASE("PIM tables") {
  {
    Session s(named_group("C2"), Config{2});
    const auto& t = s.pims(s.ambient());
    REQUIRE(t.pims.size() == 1);
    CHECK(t.pims[0].module.dim() == 2);
  }
  {
    Session s(named_group("Q8"), Config{3});
    const auto& t = s.pims(s.ambient());
    std::vector<int> d;
    for (const auto& p : t.pims) d.push_back(p.module.dim());
    CHECK(d == std::vector<int>{1, 1, 1, 1, 2});
    CHECK(t.pims[4].label == "2a");
  }
  {
    Session s(named_group("SL23"), Config{3});
    const auto& t = s.pims(s.ambient());
    CHECK(t.pims.size() == 3);
    int total = 0;
    for (const auto& p : t.pims) total += p.module.dim() * p.multiplicity;
    CHECK(total == 24);
  }
  {
    // p'-group: semisimple, PIMs are the simples
    Session s(named_group("S3"), Config{5});
    CHECK(s.pims(s.ambient()).pims.size() == 3);
  }
}

TEST_CASE("Brauer quotients") {
  auto check_group = [](const char* name, int p) {
    Session s(named_group(name), Config{p});
    GroupPtr g = s.ambient();
    const Lattice& lat = s.lattice(g);
    for (int h = 0; h < lat.size(); ++h) {
      Module m = perm_module(g, s.field(), lat.sub(h).elems);
      for (int q = 0; q < lat.size(); ++q) {
        if (!lat.is_p_group(q, p)) continue;
        CHECK(s.brauer_quotient_dim(m, q) == fixed_cosets(*g, lat.sub(h).elems, lat.sub(q).elems));
      }
    }
  };
  check_group("S3", 3);
  check_group("D8", 2);
  check_group("A4", 2);
  check_group("SL23", 3);

  Session s(named_group("SL23"), Config{3});
  const Lattice& lat = s.lattice(s.ambient());
  int c3 = -1;
  for (int i = 0; i < lat.size(); ++i)
    if (lat.sub(i).order() == 3) c3 = lat.class_rep(lat.class_of(i));
  Module reg = regular_module(s.ambient(), s.field());
  CHECK(s.brauer_quotient_dim(reg, c3) == 0);
  CHECK(s.brauer_quotient(reg, lat.trivial()).dim() == 24);
  Module triv = trivial_module(s.ambient(), s.field());
  Module bq = s.brauer_quotient(triv, c3);
  CHECK(bq.dim() == 1);
  CHECK(bq.group().order() == 2);
  CHECK(s.vertex(triv) == c3);
  for (const auto& pim : s.pims(s.ambient()).pims) CHECK(s.vertex(pim.module) == lat.trivial());

  // additivity
  Module sum = direct_sum(triv, perm_module(s.ambient(), s.field(), lat.sub(c3).elems));
  CHECK(s.brauer_quotient_dim(sum, c3) ==
        s.brauer_quotient_dim(triv, c3) + s.brauer_quotient_dim(perm_module(s.ambient(), s.field(), lat.sub(c3).elems), c3));
}

TEST_CASE("decomposition is seed independent") {
  Session s(named_group("A4"), Config{2});
  const Lattice& lat = s.lattice(s.ambient());
  for (int h = 0; h < lat.size(); ++h) {
    Module m = perm_module(s.ambient(), s.field(), lat.sub(h).elems);
    auto d1 = decompose(m, 1), d2 = decompose(m, 99);
    CHECK(d1.total_dim() == m.dim());
    REQUIRE(d1.parts.size() == d2.parts.size());
    for (const auto& a : d1.parts) {
      int hits = 0;
      for (const auto& b : d2.parts)
        if (a.multiplicity == b.multiplicity && is_isomorphic(a.module, b.module)) ++hits;
      CHECK(hits == 1);
    }
    CHECK(dims(indecomposable_summands(m, 1)) == dims(indecomposable_summands(m, 7)));
  }
}

TEST_CASE("Frobenius reciprocity and Mackey") {
  Session s(named_group("S3"), Config{2});
  GroupPtr g = s.ambient();
  const Lattice& lat = s.lattice(g);
  for (int h = 0; h < lat.size(); ++h) {
    GroupPtr hg = s.subgroup(g, h);
    Hom incl = s.inclusion(hg, g);
    for (const auto& e : s.pims(hg).pims) {
      Module ind = induce(e.module, incl);
      for (int k = 0; k < lat.size(); ++k) {
        Module n = perm_module(g, s.field(), lat.sub(k).elems);
        CHECK(hom_space(ind, n).size() == hom_space(e.module, pullback(n, incl)).size());
      }
      Module back = pullback(ind, incl);
      bool found = false;
      for (const auto& part : decompose(back).parts)
        if (is_isomorphic(part.module, e.module)) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("permutation module summands have trivial source") {
  Session s(named_group("D8"), Config{2});
  GroupPtr g = s.ambient();
  const Lattice& lat = s.lattice(g);
  for (int h = 0; h < lat.size(); ++h) {
    for (const auto& sm : s.summands(perm_module(g, s.field(), lat.sub(h).elems))) {
      const int v = s.vertex(sm.module);
      bool found = false;
      for (const auto& part : decompose(perm_module(g, s.field(), lat.sub(v).elems)).parts)
        if (is_isomorphic(part.module, sm.module)) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("quotients") {
  Session s(named_group("SL23"), Config{3});
  GroupPtr g = s.ambient();
  const Lattice& lat = s.lattice(g);
  for (int k = 0; k < lat.size(); ++k) {
    if (!lat.is_normal(k)) continue;
    const Quotient& q = s.quotient(g, k);
    CHECK(q.group->order() * lat.sub(k).order() == 24);
    CHECK(q.projection.is_homomorphism());
    CHECK(q.projection.kernel() == lat.sub(k).elems);
    if (lat.sub(k).order() == 8) CHECK(structure_name(*q.group) == "C3");
  }
  CHECK(s.quotient(g, lat.whole()).group->order() == 1);
}

TEST_CASE("module json round trip") {
  Session s(named_group("SL23"), Config{3});
  Module m = s.pims(s.ambient()).pims[1].module;
  Module back = module_from_json(module_to_json(m), s.ambient(), s.field());
  CHECK(find_isomorphism(m, back).has_value());
}

TEST_CASE("exact simplicity test") {
  Session s(named_group("S3"), Config{2});
  GroupPtr g = s.ambient();
  const Lattice& lat = s.lattice(g);
  // F[S3/C2] over F_2 (q = 4) is trivial + 2-dim simple
  int c2 = -1, c3 = -1;
  for (int c = 0; c < lat.num_classes(); ++c) {
    if (lat.class_label(c) == "C2") c2 = lat.class_rep(c);
    if (lat.class_label(c) == "C3") c3 = lat.class_rep(c);
  }
  Module perm = perm_module(g, s.field(), lat.sub(c2).elems);
  CHECK(!is_simple(perm));
  CHECK(is_simple(trivial_module(g, s.field())));
  int simple2 = 0;
  for (const auto& part : s.decompose(perm).parts)
    if (part.module.dim() == 2) simple2 += is_simple(part.module);
  CHECK(simple2 == 1);
  // F[S3/C3] is uniserial of length 2
  Module p3 = perm_module(g, s.field(), lat.sub(c3).elems);
  CHECK(is_indecomposable(p3));
  CHECK(!is_simple(p3));
}
