#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ppcan/decompose.hpp"
#include "ppcan/lattice.hpp"
#include "ppcan/module.hpp"

namespace ppcan {

struct Config {
  int p = 2;
  int max_order = 512;
  int max_dim = 600;
  std::uint64_t seed = 1;
  bool literal_sum = false;
};

struct Quotient {
  GroupPtr group;
  Hom projection;
};

struct Pim {
  Module module;
  std::string label;
  /// Multiplicity in the regular module (= dimension of the simple head).
  int multiplicity = 0;
  /// Brauer character on the p-regular class representatives of the group.
  std::vector<Cyc> brauer;
};

/// Projective indecomposable modules of one group, sorted by dimension and
/// then by Brauer character values; labels are "<dim><letter>".
struct PimTable {
  GroupPtr group;
  std::vector<int> p_regular_classes;  // element indices
  std::vector<Pim> pims;

  /// Index of the PIM isomorphic to m, or -1.
  int find(const Module& m, std::uint64_t seed) const;
};

class PPermRing;
class CofixedRing;

/// Shared state for one ambient group and prime: the splitting field, a
/// registry of every group built from the ambient one (subgroups, quotients),
/// and caches of lattices, quotients, PIM tables and classifications.
class Session {
 public:
  Session(GroupPtr ambient, Config cfg);
  ~Session();
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  const Config& config() const { return cfg_; }
  int p() const { return cfg_.p; }
  const FieldPtr& field() const { return field_; }
  const GroupPtr& ambient() const { return ambient_; }

  /// The registered group with the same degree and elements as g.
  GroupPtr intern(const GroupPtr& g);
  const Lattice& lattice(const GroupPtr& g);
  /// The subgroup with lattice index `sub` as a group in its own right.
  GroupPtr subgroup(const GroupPtr& g, int sub);
  /// Lattice index in g of a registered group h whose elements lie in g.
  int locate(const GroupPtr& h, const GroupPtr& g);
  /// h -> g for h a subgroup of g (same points).
  Hom inclusion(const GroupPtr& h, const GroupPtr& g);
  /// Indices in h of elements of g (which must lie in h).
  std::vector<int> map_elements(const GroupPtr& g, const std::vector<int>& elems, const GroupPtr& h);
  /// g/K acting on the right cosets of K; for K = 1 this is g itself.
  const Quotient& quotient(const GroupPtr& g, int normal_sub);

  const PimTable& pims(const GroupPtr& h);
  const PPermRing& pperm(const GroupPtr& h);
  const CofixedRing& cofixed(const GroupPtr& h);

  Decomposition decompose(const Module& m);
  std::vector<Summand> summands(const Module& m);
  bool isomorphic(const Module& a, const Module& b);

  /// Basis rows of M^P modulo the traces from maximal subgroups of P (a
  /// complement of the trace space inside M^P) and the trace space itself.
  struct BrauerSpace {
    FqMatrix fixed, traces, complement;
  };
  BrauerSpace brauer_space(const Module& m, int p_sub);
  /// M(P) as a module for N_G(P)/P (= quotient(normalizer, P)).
  Module brauer_quotient(const Module& m, int p_sub);
  int brauer_quotient_dim(const Module& m, int p_sub);
  /// Vertex (lattice class representative) of an indecomposable trivial-source module.
  int vertex(const Module& m);

  /// Normalizer of a subgroup as a registered group.
  GroupPtr normalizer_group(const GroupPtr& g, int sub);

 private:
  Config cfg_;
  GroupPtr ambient_;
  FieldPtr field_;
  std::recursive_mutex mu_;
  std::map<std::pair<int, std::vector<Perm>>, GroupPtr> registry_;
  std::map<const Group*, std::unique_ptr<Lattice>> lattices_;
  std::map<std::pair<const Group*, int>, Quotient> quotients_;
  std::map<const Group*, std::unique_ptr<PimTable>> pims_;
  std::map<const Group*, std::unique_ptr<PPermRing>> rings_;
  std::map<const Group*, std::unique_ptr<CofixedRing>> cofixed_;
};

}  // namespace ppcan
