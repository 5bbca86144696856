#pragma once

#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "ppcan/perm_group.hpp"

namespace ppcan {

struct Subgroup {
  std::vector<int> elems;  // sorted element indices in the parent group
  ElementSet set;
  std::vector<int> gens;
  int cls = -1;
  /// c with this = c * rep * c^{-1}, rep the representative of the class.
  int conjugator = 0;

  int order() const { return static_cast<int>(elems.size()); }
};

/// Every subgroup of a group, sorted by (order, element list), grouped into
/// conjugacy classes. The representative of a class is its first member, i.e.
/// the one with the lexicographically least element list.
class Lattice {
 public:
  explicit Lattice(GroupPtr g);

  const Group& group() const { return *g_; }
  const GroupPtr& group_ptr() const { return g_; }
  int size() const { return static_cast<int>(subs_.size()); }
  const Subgroup& sub(int i) const { return subs_[i]; }
  int find(const ElementSet& s) const;
  int find_elements(const std::vector<int>& elems) const;
  int trivial() const { return 0; }
  int whole() const { return size() - 1; }

  int num_classes() const { return static_cast<int>(class_reps_.size()); }
  int class_rep(int c) const { return class_reps_[c]; }
  const std::vector<int>& class_members(int c) const { return class_members_[c]; }
  int class_of(int i) const { return subs_[i].cls; }
  bool is_class_rep(int i) const { return class_reps_[subs_[i].cls] == i; }
  /// Unique short label of a class (structure name, numbered when repeated).
  const std::string& class_label(int c) const { return labels_[c]; }
  const std::string& label(int i) const { return labels_[subs_[i].cls]; }

  bool contains(int small, int big) const { return subs_[small].set.subset_of(subs_[big].set); }
  /// g U g^{-1}
  int conjugate(int g, int i) const;
  int normalizer(int i) const;
  bool is_normal(int i) const;
  int normal_closure(int i) const;
  /// Normal closure of U inside V (U <= V).
  int normal_closure_in(int u, int v) const;
  int normalizer_in(int u, int v) const;
  int intersect(int i, int j) const;
  int join(int i, int j) const;
  /// Subgroup generated by the elements of U whose order is a power of p.
  int p_residue(int i, int p) const;
  bool is_p_group(int i, int p) const;
  /// Class representatives of p-subgroups, in class order.
  std::vector<int> p_subgroup_classes(int p) const;

  /// Moebius function of the subgroup poset (0 unless u <= v).
  long long moebius(int u, int v) const;

 private:
  GroupPtr g_;
  std::vector<Subgroup> subs_;
  std::unordered_map<ElementSet, int, ElementSetHash> index_;
  std::vector<int> class_reps_;
  std::vector<std::vector<int>> class_members_;
  std::vector<std::string> labels_;
  mutable std::mutex mu_;
  mutable std::unordered_map<int, std::vector<long long>> moebius_rows_;
};

/// Element indices of G whose order is coprime to p, one per conjugacy class.
std::vector<int> p_regular_class_reps(const Group& g, int p);

/// Largest power of p dividing n, and n with all factors p removed.
int p_part(int n, int p);
int p_prime_part(int n, int p);
bool is_power_of(long long n, int p);

}  // namespace ppcan
