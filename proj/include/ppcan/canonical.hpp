#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ppcan/pperm_ring.hpp"

namespace ppcan {

/// Basis element [U, M_U^{K,F}]: U a subgroup class representative, and the
/// (K, F) pair chosen as the least index in its N_G(U)-orbit.
struct RClass {
  int u = 0;      // lattice index in the group
  int qpair = 0;  // index into the QPairs of T(U)
  std::string u_label, k_label, f_label, label;
};

/// Species index (V, L, t): V a subgroup class representative and (L, t) the
/// least exprojective species of V in its N_G(V)-orbit.
struct KClass {
  int v = 0;
  int ex_species = 0;  // index into ex_species() of T(V)
  std::string label;
};

/// The cofixed ring built from the exprojective rings of all subgroups, on the
/// basis of conjugacy classes of triples (U, K, F), with linearization to T(G)
/// and the canonical induction map.
class CofixedRing {
 public:
  CofixedRing(Session& s, GroupPtr g);

  const GroupPtr& group() const { return g_; }
  Session& session() const { return *s_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<RClass>& basis() const { return basis_; }
  /// Basis index of [U, M_U^{q}] for a class representative u.
  int index(int u, int qpair) const { return index_.at(u)[qpair]; }
  GroupPtr subgroup_group(int u) const;
  const PPermRing& local(int u) const;
  const PPermRing& top() const;

  /// [U, x] for any subgroup u (x in the QPair basis of T^ex(U)).
  RationalVector embed(int u, const RationalVector& x) const;
  /// Adds weight * [rep, y] where y is the pullback of x (in T^ex(A), A = hom.dst)
  /// along hom : rep -> A, rep a class representative of this group.
  void add_transported(RationalVector& out, int rep, const Hom& hom, const PPermRing& ring_a, const RationalVector& x,
                       const Rational& weight) const;

  /// Product of two basis elements by the double coset formula.
  const RationalVector& product(int a, int b) const;
  RationalVector multiply(const RationalVector& x, const RationalVector& y) const;
  CycVector multiply(const CycVector& x, const CycVector& y) const;
  /// Restriction to the group of `h` (a subgroup of this group).
  RationalVector restrict_to(const CofixedRing& h, const RationalVector& x) const;
  /// Isogation along an automorphism of the group.
  RationalVector isogate(const Hom& aut, const RationalVector& x) const;

  /// Row r: coordinates in T(G) of the induction of basis element r.
  const IntMatrix& lin_matrix() const;
  RationalVector lin(const RationalVector& x) const;
  CycVector lin(const CycVector& x) const;

  /// can_G on a vector of T(G); the literal form sums over every pair of
  /// subgroups, the default one over class representatives of the outer subgroup.
  RationalVector can(const RationalVector& xi, bool literal = false) const;
  /// can_G of basis element i of T(G), cached.
  const RationalVector& can_basis(int i, bool literal = false) const;

  /// The identity element, solved from e * b = b.
  const RationalVector& identity() const;

  const std::vector<KClass>& k_classes() const;
  /// Rows: k_classes(), columns: basis.
  const CycMatrix& species_matrix() const;
  /// Columns of the inverse species matrix.
  const std::vector<CycVector>& idempotents() const;
  /// K class conjugate to (V, L, t); v and l lattice indices, t an element of V.
  int k_class_of(int v, int l, int t) const;

 private:
  void enumerate();
  int ex_species_index(const PPermRing& tv, int l, int t_in_v) const;

  Session* s_;
  GroupPtr g_;
  std::vector<RClass> basis_;
  std::map<int, std::vector<int>> index_;
  mutable std::map<int, std::vector<int>> k_index_;  // v -> ex species -> K class

  mutable std::recursive_mutex mu_;
  mutable std::map<std::pair<int, int>, RationalVector> products_;
  mutable std::optional<IntMatrix> lin_;
  mutable std::map<std::pair<int, bool>, RationalVector> can_;
  mutable std::optional<RationalVector> identity_;
  mutable std::optional<std::vector<KClass>> k_classes_;
  mutable std::optional<CycMatrix> species_;
  mutable std::optional<std::vector<CycVector>> idempotents_;
};

/// A generating set of the automorphism group, found by trying images of the
/// group's generators; identity excluded.
std::vector<Hom> automorphism_generators(const GroupPtr& g);

/// Hom from src to dst (both with elements inside `parent`) given by a map on parent indices.
template <typename F>
Hom hom_via(const Group& parent, const GroupPtr& src, const GroupPtr& dst, F f) {
  Hom h{src, dst, std::vector<int>(src->order())};
  for (int k = 0; k < src->order(); ++k) {
    const int x = f(parent.index_of(src->perm(k)));
    h.image[k] = dst->index_of(parent.perm(x));
    if (h.image[k] < 0) throw std::logic_error("hom_via: image outside the target group");
  }
  return h;
}

}  // namespace ppcan
