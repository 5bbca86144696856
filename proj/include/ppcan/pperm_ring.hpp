#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ppcan/dense_matrix.hpp"
#include "ppcan/rational.hpp"
#include "ppcan/session.hpp"

namespace ppcan {

/// One indecomposable p-permutation module M_{P,E}: P a p-subgroup class
/// representative, E the inflation of a PIM of N(P)/P.
struct PPermClass {
  int p_sub = 0;
  int pim = 0;  // index into pims(N(P)/P)
  Module module;
  Module inflated;  // E over N_G(P)
  std::string label;
  bool exprojective = false;  // the vertex acts trivially
  int qpair = -1;
};

/// An exprojective indecomposable given by (K, F): K normal and generated by
/// its p-elements, F a PIM of G/K, realized by inflation.
struct QPair {
  int k = 0;
  int pim = 0;  // index into pims(G/K)
  Module module;
  std::string label;
  int basis = -1;  // the matching PPermClass
};

/// (P, s): P a p-subgroup class rep, s a p-regular class rep of N(P)/P.
struct SpeciesIndex {
  int p_sub = 0;
  int s = 0;  // element of quotient(N(P), P)
  std::string label;
};

/// (L, t): L normal and generated by its p-elements, t a p-regular class rep of G/L.
struct ExSpeciesIndex {
  int l = 0;
  int t = 0;  // element of quotient(G, L)
  std::string label;
};

/// Label of a conjugacy class: element order followed by a letter.
std::string element_class_label(const Group& g, int elem);

/// The Grothendieck ring of p-permutation modules of one group, on the basis
/// of indecomposables, with its exprojective subring and species.
class PPermRing {
 public:
  PPermRing(Session& s, GroupPtr g);

  const GroupPtr& group() const { return g_; }
  Session& session() const { return *s_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  int ex_rank() const { return static_cast<int>(qpairs_.size()); }
  const std::vector<PPermClass>& basis() const { return basis_; }
  const std::vector<QPair>& qpairs() const { return qpairs_; }

  /// Basis index of an indecomposable module, or -1.
  int match(const Module& indecomposable) const;
  /// Multiplicities of the basis modules in m; throws if a summand matches nothing.
  IntVector coordinates(const Module& m) const;
  const IntVector& product(int i, int j) const;
  IntVector multiply(const IntVector& x, const IntVector& y) const;
  /// Coordinates of the trivial module.
  IntVector one() const;

  /// T(G) -> T^ex(G): keeps exprojective coordinates, in the QPair basis.
  template <typename V>
  V pi(const V& x) const {
    V out(qpairs_.size());
    for (std::size_t q = 0; q < qpairs_.size(); ++q) out[q] = x[qpairs_[q].basis];
    return out;
  }
  /// T^ex(G) -> T(G).
  template <typename V>
  V embed_ex(const V& x) const {
    V out(basis_.size());
    for (std::size_t q = 0; q < qpairs_.size(); ++q) out[qpairs_[q].basis] = x[q];
    return out;
  }
  bool exprojective_supported(const IntVector& x) const;

  /// Row i: coordinates in T(hom.src) of the pullback of basis module i along hom (hom.dst = this group).
  const IntMatrix& pullback_matrix(const Hom& hom) const;
  /// Row j: coordinates here of the induction of basis module j of the subgroup h.
  const IntMatrix& induction_matrix(const GroupPtr& h) const;

  const std::vector<SpeciesIndex>& species() const;
  /// Rows: species, columns: basis.
  const CycMatrix& species_matrix() const;
  const std::vector<ExSpeciesIndex>& ex_species() const;
  /// Rows: exprojective species, columns: QPairs.
  const CycMatrix& ex_species_matrix() const;
  /// epsilon^{L,t} on any module: zero unless L acts trivially.
  Cyc ex_species_value(int ex_species, const Module& m) const;

  /// Primitive idempotents of K T(G): the dual basis to the species, as columns
  /// of the inverse of the species matrix; entry [k][i] = coefficient of basis i.
  const std::vector<CycVector>& idempotents() const;

 private:
  void classify();
  void classify_qpairs();

  Session* s_;
  GroupPtr g_;
  std::vector<PPermClass> basis_;
  std::vector<QPair> qpairs_;

  mutable std::recursive_mutex mu_;
  mutable std::map<std::pair<int, int>, IntVector> products_;
  mutable std::map<std::pair<const Group*, std::vector<int>>, IntMatrix> pullbacks_;
  mutable std::map<const Group*, IntMatrix> inductions_;
  mutable std::optional<std::vector<SpeciesIndex>> species_;
  mutable std::optional<CycMatrix> species_matrix_;
  mutable std::optional<std::vector<ExSpeciesIndex>> ex_species_;
  mutable std::optional<CycMatrix> ex_species_matrix_;
  mutable std::optional<std::vector<CycVector>> idempotents_;
};

/// Multiply an integer row vector by an integer matrix (rows indexed like the vector).
IntVector apply(const IntVector& x, const IntMatrix& m, int cols);
RationalVector apply(const RationalVector& x, const IntMatrix& m, int cols);

/// y -> g^{-1} y g from ^gU to U, both registered subgroups of the ambient group g_parent.
Hom conjugation_map(const GroupPtr& parent, int g, const GroupPtr& conj_sub, const GroupPtr& sub);

}  // namespace ppcan
