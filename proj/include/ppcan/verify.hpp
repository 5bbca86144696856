#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ppcan/canonical.hpp"

namespace ppcan {

/// One named identity check. `criterion` groups checks for the acceptance runner.
struct Check {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample or summary, empty when nothing to say
};

class CheckList {
 public:
  void add(int criterion, std::string name, bool pass, std::string detail = {});
  void append(const CheckList& other);
  const std::vector<Check>& checks() const { return checks_; }
  bool all_pass() const;
  bool all_pass(int criterion) const;
  nlohmann::json to_json() const;

 private:
  std::vector<Check> checks_;
};

/// Classification against full decompositions of every F[G/H], the
/// exprojectivity criterion via normal closures, tensor closure, fixed-point
/// counts of Brauer quotients, and vertices of the (K, F) realizations.
CheckList check_structure(Session& s);
/// Species and idempotents of K T(G) and of K T^ex(G).
CheckList check_species_t(Session& s);
/// can_G: section of lin, restriction and isogation compatibility, fixed
/// exprojectives, p-power denominators, the multiplicity identity for normal
/// subgroups of prime index, surjectivity of lin over Z; with `literal`, also
/// compares the literal double sum against the class-representative sum.
CheckList check_canonical(Session& s, bool literal);
/// Species and idempotents of the cofixed ring and the idempotent lifts.
CheckList check_species_calt(Session& s);
/// All of the above.
CheckList verify_all(Session& s, bool literal);

/// Index of the unique basis module of T(G) that is neither simple nor
/// projective, or -1 when there is none or several.
int find_non_simple_non_projective(const PPermRing& t);

struct CounterexampleReport {
  CheckList checks;
  std::string coefficient;  // of [Q8, X] in can(Y)
  nlohmann::json can_y;     // canind entries of can(Y)
  std::string y_label, y_vertex, x_label;
};

/// SL(2,3) at p = 3: locates Y and X and evaluates can(Y) on the Q8 component.
CounterexampleReport counterexample_sl23(const Config& cfg);

/// {"U", "K", "F", "coeff"} for every nonzero coefficient, in basis order.
nlohmann::json canind_entries(const CofixedRing& r, const RationalVector& x);

/// Subgroup generated by the given elements, as a lattice index.
int generated_subgroup(const Lattice& lat, const std::vector<int>& gens);

}  // namespace ppcan
