#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "ppcan/cyclotomic.hpp"
#include "ppcan/fq_matrix.hpp"
#include "ppcan/perm_group.hpp"

namespace ppcan {

/// A finite-dimensional right F_q G-module: v . g = v * action(g), with
/// action(gh) = action(g) action(h). Stored by the matrices of the group's
/// generators; matrices of other elements are built on demand and memoized.
class Module {
 public:
  Module() = default;
  Module(GroupPtr g, FieldPtr f, int dim, std::vector<FqMatrix> generator_matrices, std::string label = {});

  const Group& group() const { return *data_->group; }
  const GroupPtr& group_ptr() const { return data_->group; }
  const Field& field() const { return *data_->field; }
  const FieldPtr& field_ptr() const { return data_->field; }
  int dim() const { return data_->dim; }
  const std::vector<FqMatrix>& generator_matrices() const { return data_->gens; }
  const std::string& label() const { return data_->label; }
  Module relabeled(std::string label) const;

  const FqMatrix& action(int e) const;
  /// Checks action(a) action(b) = action(ab) for every element a and generator b.
  bool validate() const;

 private:
  struct Data {
    GroupPtr group;
    FieldPtr field;
    int dim = 0;
    std::vector<FqMatrix> gens;
    std::string label;
    mutable std::mutex mu;
    mutable std::unordered_map<int, FqMatrix> memo;
  };
  std::shared_ptr<Data> data_;
};

Module trivial_module(const GroupPtr& g, const FieldPtr& f);
/// Permutation module on the right cosets H x of the subgroup with the given
/// sorted element indices; cosets are ordered by their least element.
Module perm_module(const GroupPtr& g, const FieldPtr& f, const std::vector<int>& subgroup);
Module regular_module(const GroupPtr& g, const FieldPtr& f);

/// Module over hom.src with x acting as hom(x) acts on m.
Module pullback(const Module& m, const Hom& hom, std::string label = {});
/// Induction along an injective hom H -> G, on blocks indexed by the right
/// cosets of the image (ordered by least element).
Module induce(const Module& m, const Hom& inclusion, std::string label = {});
Module tensor(const Module& a, const Module& b);
Module direct_sum(const Module& a, const Module& b);
/// The submodule spanned by the rows of `basis` (which must be invariant), in that basis.
Module submodule(const Module& m, const FqMatrix& basis);
/// The quotient by the invariant subspace spanned by `sub`, on the complement
/// rows `complement` (sub + complement a basis of the ambient space).
Module quotient_module(const Module& m, const FqMatrix& sub, const FqMatrix& complement);

/// Echelon basis of the vectors fixed by the given group elements.
FqMatrix fixed_points(const Module& m, const std::vector<int>& elems);
/// Sorted elements acting as the identity.
std::vector<int> kernel_of_action(const Module& m);
bool acts_trivially(const Module& m, const std::vector<int>& elems);
/// Brauer character value at an element of order prime to p.
Cyc brauer_character(const Module& m, int elem);
/// Whether rows of `basis` span a subspace invariant under the group.
bool is_invariant(const Module& m, const FqMatrix& basis);

/// {"field": {"p", "m"} (optional), "dim": n, "matrices": [[[..]..]..]} with one
/// matrix per generator of the group (in generators() order). Entries are
/// either integers (field elements by encoding) or arrays of prime-field
/// coefficients, low degree first.
Module module_from_json(const nlohmann::json& doc, const GroupPtr& g, const FieldPtr& f);
nlohmann::json module_to_json(const Module& m);

}  // namespace ppcan
