#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace ppcan {

/// Permutation of {0, ..., n-1} as its image array. Products compose left to
/// right: (a*b)[i] = b[a[i]].
using Perm = std::vector<std::uint16_t>;

Perm perm_identity(int n);
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inv(const Perm& a);
bool perm_is_valid(const Perm& a);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// Bitset over the element indices of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int n) : n_(n), words_((n + 63) / 64, 0) {}
  ElementSet(int n, const std::vector<int>& elems);

  int universe() const { return n_; }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  int count() const;
  bool subset_of(const ElementSet& o) const;
  ElementSet intersect(const ElementSet& o) const;
  std::vector<int> elements() const;
  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.words_ == b.words_; }
  friend bool operator<(const ElementSet& a, const ElementSet& b) { return a.words_ < b.words_; }
  std::size_t hash() const noexcept;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

/// A finite permutation group with its elements enumerated in lexicographic
/// order of their image arrays (so the identity is element 0), a full
/// multiplication table and conjugacy classes.
class Group {
 public:
  /// Generated subgroup of Sym(degree); throws if the order exceeds max_order.
  static std::shared_ptr<const Group> generate(int degree, const std::vector<Perm>& gens, int max_order,
                                               std::string name = {});
  /// From a complete list of elements (closed under products).
  static std::shared_ptr<const Group> from_elements(int degree, std::vector<Perm> elems, std::string name = {});

  int order() const { return n_; }
  int degree() const { return degree_; }
  const std::string& name() const { return name_; }
  const Perm& perm(int e) const { return elems_[e]; }
  const std::vector<Perm>& perms() const { return elems_; }
  int index_of(const Perm& p) const;

  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  /// g x g^{-1}
  int conj(int g, int x) const { return mul(mul(g, x), inv_[g]); }
  int power(int a, long long k) const;
  int elem_order(int a) const { return order_[a]; }
  int exponent() const;
  bool is_abelian() const;

  /// Deterministic generating set: greedy over the sorted elements.
  const std::vector<int>& generators() const { return gens_; }
  /// e = word_parent(e) * generators()[word_gen(e)] along a breadth-first tree.
  int word_parent(int e) const { return parent_[e]; }
  int word_gen(int e) const { return parent_gen_[e]; }

  int num_classes() const { return static_cast<int>(class_reps_.size()); }
  /// Class representatives (least element index in each class), in increasing order.
  const std::vector<int>& class_reps() const { return class_reps_; }
  int class_of(int e) const { return class_of_[e]; }
  int class_size(int c) const { return class_size_[c]; }

  /// Sorted element indices of the subgroup generated by gens.
  std::vector<int> closure(const std::vector<int>& gens) const;
  ElementSet closure_set(const ElementSet& base, const std::vector<int>& base_gens, int extra) const;
  /// Greedy generating set for a subgroup given by sorted elements.
  std::vector<int> generators_of(const std::vector<int>& sorted_elems) const;

 private:
  Group() = default;
  void finish(std::string name);

  int degree_ = 0, n_ = 0;
  std::string name_;
  std::vector<Perm> elems_;
  std::unordered_map<Perm, int, PermHash> index_;
  std::vector<int> table_, inv_, order_;
  std::vector<int> gens_, parent_, parent_gen_;
  std::vector<int> class_reps_, class_of_, class_size_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// A homomorphism given on every element of its source.
struct Hom {
  GroupPtr src, dst;
  std::vector<int> image;

  int operator()(int e) const { return image[e]; }
  bool is_homomorphism() const;
  bool is_injective() const;
  /// Elements of src mapping to the identity.
  std::vector<int> kernel() const;
};

/// First f, then g.
Hom compose(const Hom& f, const Hom& g);
Hom identity_hom(const GroupPtr& g);
/// Both groups act on the same points; x in src maps to c^{-1} x c in dst
/// (c a permutation of the common point set). Throws if the image leaves dst.
Hom conjugation_hom(const GroupPtr& src, const GroupPtr& dst, const Perm& c);

/// Short structural name (C4, C2xC2, S3, D8, Q8, A4, SL(2,3), ...) read off
/// from order statistics; falls back to "G<order>" where that is ambiguous.
std::string structure_name(const Group& g);
/// Same, from the element orders of a group and whether it is abelian.
std::string structure_name(const std::vector<int>& element_orders, bool abelian);

}  // namespace ppcan
