#include "ppcan/perm_group.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace ppcan {

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Perm perm_inv(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint16_t>(i);
  return r;
}

bool perm_is_valid(const Perm& a) {
  std::vector<char> seen(a.size(), 0);
  for (auto x : a) {
    if (x >= a.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : p) h = (h ^ x) * 1099511628211ULL;
  return h;
}

ElementSet::ElementSet(int n, const std::vector<int>& elems) : ElementSet(n) {
  for (int e : elems) set(e);
}

int ElementSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool ElementSet::subset_of(const ElementSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

ElementSet ElementSet::intersect(const ElementSet& o) const {
  ElementSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
  return r;
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w) {
      const int b = std::countr_zero(w);
      out.push_back(static_cast<int>(i * 64 + b));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
  return h;
}

std::shared_ptr<const Group> Group::generate(int degree, const std::vector<Perm>& gens, int max_order,
                                             std::string name) {
  for (const auto& g : gens)
    if (static_cast<int>(g.size()) != degree || !perm_is_valid(g))
      throw std::invalid_argument("generator is not a permutation of the stated degree");
  std::unordered_map<Perm, int, PermHash> seen;
  std::vector<Perm> elems{perm_identity(degree)};
  seen.emplace(elems[0], 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Perm x = perm_mul(elems[i], g);
      if (seen.count(x)) continue;
      if (static_cast<int>(elems.size()) >= max_order)
        throw std::runtime_error("group order exceeds the configured cap of " + std::to_string(max_order));
      seen.emplace(x, static_cast<int>(elems.size()));
      elems.push_back(std::move(x));
    }
  }
  return from_elements(degree, std::move(elems), std::move(name));
}

std::shared_ptr<const Group> Group::from_elements(int degree, std::vector<Perm> elems, std::string name) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty() || elems[0] != perm_identity(degree)) throw std::invalid_argument("element list lacks the identity");
  std::shared_ptr<Group> g(new Group());
  g->degree_ = degree;
  g->n_ = static_cast<int>(elems.size());
  g->elems_ = std::move(elems);
  g->finish(std::move(name));
  return g;
}

int Group::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

void Group::finish(std::string name) {
  const int n = n_;
  for (int i = 0; i < n; ++i) index_.emplace(elems_[i], i);
  table_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int c = index_of(perm_mul(elems_[a], elems_[b]));
      if (c < 0) throw std::invalid_argument("element list is not closed under products");
      table_[static_cast<std::size_t>(a) * n + b] = c;
    }
  inv_.assign(n, 0);
  order_.assign(n, 1);
  for (int a = 0; a < n; ++a) {
    inv_[a] = index_of(perm_inv(elems_[a]));
    int x = a, k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    order_[a] = k;
  }
  order_[0] = 1;

  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  gens_ = generators_of(all);

  parent_.assign(n, -1);
  parent_gen_.assign(n, -1);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int gi = 0; gi < static_cast<int>(gens_.size()); ++gi) {
      const int y = mul(x, gens_[gi]);
      if (seen[y]) continue;
      seen[y] = 1;
      parent_[y] = x;
      parent_gen_[y] = gi;
      queue.push_back(y);
    }
  }

  class_of_.assign(n, -1);
  for (int e = 0; e < n; ++e) {
    if (class_of_[e] >= 0) continue;
    const int c = static_cast<int>(class_reps_.size());
    class_reps_.push_back(e);
    std::vector<int> orbit{e};
    class_of_[e] = c;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (int g : gens_) {
        const int y = conj(g, orbit[i]);
        if (class_of_[y] < 0) {
          class_of_[y] = c;
          orbit.push_back(y);
        }
      }
    class_size_.push_back(static_cast<int>(orbit.size()));
  }

  name_ = name.empty() ? structure_name(*this) : std::move(name);
}

int Group::power(int a, long long k) const {
  const int o = order_[a];
  k %= o;
  if (k < 0) k += o;
  int r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int Group::exponent() const {
  int e = 1;
  for (int o : order_) e = std::lcm(e, o);
  return e;
}

bool Group::is_abelian() const {
  for (int a : gens_)
    for (int b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<int> Group::closure(const std::vector<int>& gens) const {
  std::vector<char> in(n_, 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int g : gens) {
      const int y = mul(elems[i], g);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

ElementSet Group::closure_set(const ElementSet& base, const std::vector<int>& base_gens, int extra) const {
  if (base.test(extra)) return base;
  std::vector<int> gens = base_gens;
  gens.push_back(extra);
  ElementSet out(n_);
  std::vector<int> elems = base.elements();
  for (int e : elems) out.set(e);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int g : gens) {
      const int y = mul(elems[i], g);
      if (!out.test(y)) {
        out.set(y);
        elems.push_back(y);
      }
    }
  return out;
}

std::vector<int> Group::generators_of(const std::vector<int>& sorted_elems) const {
  std::vector<int> gens;
  ElementSet current(n_, {0});
  for (int e : sorted_elems) {
    if (current.test(e)) continue;
    current = closure_set(current, gens, e);
    gens.push_back(e);
  }
  return gens;
}

bool Hom::is_homomorphism() const {
  if (static_cast<int>(image.size()) != src->order()) return false;
  for (int a : src->generators())
    for (int b = 0; b < src->order(); ++b)
      if (image[src->mul(b, a)] != dst->mul(image[b], image[a])) return false;
  return image[0] == 0;
}

bool Hom::is_injective() const {
  for (int e = 1; e < src->order(); ++e)
    if (image[e] == 0) return false;
  return true;
}

std::vector<int> Hom::kernel() const {
  std::vector<int> k;
  for (int e = 0; e < src->order(); ++e)
    if (image[e] == 0) k.push_back(e);
  return k;
}

Hom compose(const Hom& f, const Hom& g) {
  if (f.dst.get() != g.src.get() && f.dst->perms() != g.src->perms())
    throw std::invalid_argument("compose: codomain/domain mismatch");
  Hom h{f.src, g.dst, std::vector<int>(f.src->order())};
  for (int e = 0; e < f.src->order(); ++e) h.image[e] = g.image[f.image[e]];
  return h;
}

Hom identity_hom(const GroupPtr& g) {
  Hom h{g, g, std::vector<int>(g->order())};
  std::iota(h.image.begin(), h.image.end(), 0);
  return h;
}

Hom conjugation_hom(const GroupPtr& src, const GroupPtr& dst, const Perm& c) {
  const Perm ci = perm_inv(c);
  Hom h{src, dst, std::vector<int>(src->order())};
  for (int e = 0; e < src->order(); ++e) {
    const int y = dst->index_of(perm_mul(perm_mul(ci, src->perm(e)), c));
    if (y < 0) throw std::invalid_argument("conjugation_hom: image leaves the target group");
    h.image[e] = y;
  }
  return h;
}

std::string structure_name(const Group& g) {
  std::vector<int> orders(g.order());
  for (int e = 0; e < g.order(); ++e) orders[e] = g.elem_order(e);
  return structure_name(orders, g.is_abelian());
}

std::string structure_name(const std::vector<int>& element_orders, bool ab) {
  const int n = static_cast<int>(element_orders.size());
  if (n == 1) return "1";
  std::vector<int> count(n + 1, 0);
  for (int o : element_orders) ++count[o];
  if (count[n] > 0) return "C" + std::to_string(n);
  switch (n) {
    case 4: return "C2xC2";
    case 6: return "S3";
    case 8:
      if (ab) return count[2] == 7 ? "C2xC2xC2" : "C4xC2";
      return count[2] == 5 ? "D8" : "Q8";
    case 9: return "C3xC3";
    case 12:
      if (!ab && count[2] == 3 && count[6] == 0) return "A4";
      break;
    case 24:
      if (!ab && count[2] == 1 && count[6] > 0 && count[8] == 0 && count[4] == 6) return "SL23";
      if (!ab && count[2] == 9 && count[4] == 6 && count[3] == 8) return "S4";
      break;
    default: break;
  }
  return "G" + std::to_string(n);
}

}  // namespace ppcan
