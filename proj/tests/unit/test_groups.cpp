#include <algorithm>
#include <set>

#include "doctest.h"
#include "ppcan/lattice.hpp"
#include "ppcan/named_groups.hpp"

using namespace ppcan;

namespace {

// All subgroups generated by at most two elements, as sorted element sets.
std::set<std::vector<int>> two_generated_subgroups(const Group& g) {
  std::set<std::vector<int>> out;
  for (int a = 0; a < g.order(); ++a)
    for (int b = a; b < g.order(); ++b) out.insert(g.closure({a, b}));
  return out;
}

// 2x2 matrices over F_3 of determinant 1.
int count_sl23() {
  int n = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if (((a * d - b * c) % 3 + 3) % 3 == 1) ++n;
  return n;
}

}  // namespace

TEST_CASE("named groups: orders and classes") {
  CHECK(named_group("trivial")->order() == 1);
  CHECK(named_group("C2")->order() == 2);
  auto q8 = named_group("Q8");
  CHECK(q8->order() == 8);
  CHECK(q8->num_classes() == 5);
  CHECK(structure_name(*q8) == "Q8");
  auto sl = named_group("SL23");
  CHECK(sl->order() == count_sl23());
  CHECK(sl->num_classes() == 7);
  CHECK(named_group("D8")->name() == "D8");
  CHECK(structure_name(*named_group("C6")) == "C6");
  CHECK(structure_name(*named_group("S4")) == "S4");
  CHECK(structure_name(*sl) == "SL23");
  CHECK(named_group("A4")->exponent() == 6);
  CHECK_THROWS(named_group("S4", 10));
  CHECK_THROWS(named_group("nope"));
}

TEST_CASE("group tables are consistent") {
  for (const auto& name : named_group_names()) {
    auto g = named_group(name);
    CHECK(g->perm(0) == perm_identity(g->degree()));
    int total = 0;
    for (int c = 0; c < g->num_classes(); ++c) total += g->class_size(c);
    CHECK(total == g->order());
    for (int e = 0; e < g->order(); ++e) {
      CHECK(g->mul(e, g->inv(e)) == 0);
      CHECK(g->power(e, g->elem_order(e)) == 0);
      if (e) {
        CHECK(g->mul(g->word_parent(e), g->generators()[g->word_gen(e)]) == e);
      }
    }
    CHECK(static_cast<int>(g->closure(g->generators()).size()) == g->order());
  }
}

TEST_CASE("group json round trip") {
  auto g = named_group("S3");
  auto h = group_from_json(group_to_json(*g));
  CHECK(h->perms() == g->perms());
  CHECK_THROWS(group_from_json(nlohmann::json{{"degree", 2}, {"generators", {{1, 3}}}}));
  CHECK_THROWS(group_from_json(nlohmann::json{{"degree", 2}}));
}

TEST_CASE("subgroup lattice counts") {
  CHECK(Lattice(named_group("C2")).size() == 2);
  Lattice v4(named_group("C2xC2"));
  CHECK(v4.size() == 5);
  CHECK(v4.num_classes() == 5);
  CHECK(v4.moebius(0, v4.whole()) == 2);
  Lattice sl(named_group("SL23"));
  CHECK(sl.size() == 15);
  CHECK(sl.num_classes() == 7);
  std::vector<std::string> labels;
  for (int c = 0; c < sl.num_classes(); ++c) labels.push_back(sl.class_label(c));
  CHECK(labels == std::vector<std::string>{"1", "C2", "C3", "C4", "C6", "Q8", "SL23"});
}

TEST_CASE("lattice agrees with two-generated enumeration") {
  for (const char* name : {"C2xC2", "S3", "D8", "Q8", "A4", "SL23", "S4", "C3xC3"}) {
    auto g = named_group(name);
    Lattice lat(g);
    auto oracle = two_generated_subgroups(*g);
    std::set<std::vector<int>> mine;
    for (int i = 0; i < lat.size(); ++i) mine.insert(lat.sub(i).elems);
    CHECK(mine == oracle);
  }
}

TEST_CASE("lattice structural invariants") {
  for (const auto& name : named_group_names()) {
    auto g = named_group(name);
    Lattice lat(g);
    for (int c = 0; c < lat.num_classes(); ++c) {
      const int r = lat.class_rep(c);
      CHECK(static_cast<int>(lat.class_members(c).size()) * lat.sub(lat.normalizer(r)).order() == g->order());
      for (int m : lat.class_members(c)) {
        CHECK(lat.conjugate(lat.sub(m).conjugator, r) == m);
        CHECK(lat.sub(r).elems <= lat.sub(m).elems);
      }
    }
    for (int u = 0; u < lat.size(); ++u) {
      CHECK(lat.moebius(u, u) == 1);
      for (int v = 0; v < lat.size(); ++v) {
        if (u == v || !lat.contains(u, v)) continue;
        long long s = 0;
        for (int w = 0; w < lat.size(); ++w)
          if (lat.contains(u, w) && lat.contains(w, v)) s += lat.moebius(u, w);
        CHECK(s == 0);
      }
      for (int p : {2, 3}) {
        const int r = lat.p_residue(u, p);
        CHECK(lat.p_residue(r, p) == r);
      }
    }
  }
}

TEST_CASE("normalizers, closures, residues in SL(2,3)") {
  Lattice lat(named_group("SL23"));
  int syl3 = -1;
  for (int i = 0; i < lat.size(); ++i)
    if (lat.sub(i).order() == 3) {
      syl3 = i;
      break;
    }
  REQUIRE(syl3 >= 0);
  CHECK(lat.normal_closure(syl3) == lat.whole());
  CHECK(lat.sub(lat.normalizer(syl3)).order() == 6);
  CHECK(lat.p_residue(lat.whole(), 3) == lat.whole());
  CHECK(lat.is_normal(lat.find_elements(lat.sub(lat.whole()).elems)));
  int q8 = -1;
  for (int i = 0; i < lat.size(); ++i)
    if (lat.sub(i).order() == 8) q8 = i;
  CHECK(lat.is_normal(q8));
  CHECK(lat.p_residue(q8, 3) == lat.trivial());
  CHECK(lat.p_subgroup_classes(3).size() == 2);
  CHECK(p_regular_class_reps(lat.group(), 3).size() == 3);
  CHECK(p_regular_class_reps(*named_group("C2"), 2).size() == 1);
  CHECK(lat.moebius(0, 1) == -1);
}
