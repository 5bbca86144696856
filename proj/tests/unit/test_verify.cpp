#include "doctest.h"
#include "ppcan/named_groups.hpp"
#include "ppcan/verify.hpp"

using namespace ppcan;

TEST_CASE("check suites pass on C2 and S3") {
  for (auto [name, p] : std::vector<std::pair<const char*, int>>{{"C2", 2}, {"S3", 3}}) {
    CAPTURE(name);
    Session s(named_group(name), Config{p});
    CheckList all = verify_all(s, true);
    for (const auto& c : all.checks()) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.pass);
    }
    CHECK(all.all_pass(8));
  }
}

TEST_CASE("check list bookkeeping") {
  CheckList l;
  l.add(1, "a", true);
  l.add(2, "b", false, "why");
  CHECK(l.all_pass(1));
  CHECK(!l.all_pass(2));
  CHECK(!l.all_pass());
  CHECK(l.to_json()[1]["detail"] == "why");
  CHECK(!l.to_json()[0].contains("detail"));
}

TEST_CASE("non-simple non-projective module") {
  Session s3(named_group("SL23"), Config{3});
  const PPermRing& t = s3.pperm(s3.ambient());
  const int y = find_non_simple_non_projective(t);
  REQUIRE(y >= 0);
  // Ind from C6 of the sign module has dim 4; a projective summand (dim 3) would leave Y of dim 1, hence exprojective
  CHECK(t.basis()[y].module.dim() == 4);
  CHECK(!t.basis()[y].exprojective);
  // D8 at p = 2 has several such modules
  Session d8(named_group("D8"), Config{2});
  CHECK(find_non_simple_non_projective(d8.pperm(d8.ambient())) == -1);
}

TEST_CASE("counterexample report") {
  CounterexampleReport rep = counterexample_sl23(Config{3});
  CHECK(rep.checks.all_pass());
  CHECK(rep.coefficient == "2/3");
  CHECK(rep.y_vertex == "C3");
  CHECK(rep.x_label == "2a");
}
