#include "ppcan/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ppcan {

int p_part(int n, int p) {
  int r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

int p_prime_part(int n, int p) {
  while (n % p == 0) n /= p;
  return n;
}

bool is_power_of(long long n, int p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<int> p_regular_class_reps(const Group& g, int p) {
  std::vector<int> out;
  for (int r : g.class_reps())
    if (g.elem_order(r) % p != 0) out.push_back(r);
  return out;
}

Lattice::Lattice(GroupPtr g) : g_(std::move(g)) {
  const Group& G = *g_;
  const int n = G.order();

  std::vector<ElementSet> found{ElementSet(n, {0})};
  std::vector<std::vector<int>> found_gens{{}};
  std::unordered_map<ElementSet, int, ElementSetHash> seen{{found[0], 0}};
  for (std::size_t i = 0; i < found.size(); ++i) {
    const ElementSet h = found[i];
    const std::vector<int> hgens = found_gens[i];
    const std::vector<int> helems = h.elements();
    ElementSet covered = h;
    for (int x = 0; x < n; ++x) {
      if (covered.test(x)) continue;
      for (int e : helems) covered.set(G.mul(e, x));
      ElementSet j = G.closure_set(h, hgens, x);
      if (seen.count(j)) continue;
      seen.emplace(j, static_cast<int>(found.size()));
      found.push_back(std::move(j));
      auto gens = hgens;
      gens.push_back(x);
      found_gens.push_back(std::move(gens));
    }
  }

  subs_.reserve(found.size());
  for (auto& s : found) {
    Subgroup sg;
    sg.elems = s.elements();
    sg.set = std::move(s);
    subs_.push_back(std::move(sg));
  }
  std::sort(subs_.begin(), subs_.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elems < b.elems;
  });
  for (int i = 0; i < size(); ++i) {
    index_.emplace(subs_[i].set, i);
    subs_[i].gens = G.generators_of(subs_[i].elems);
  }

  for (int i = 0; i < size(); ++i) {
    if (subs_[i].cls >= 0) continue;
    const int c = static_cast<int>(class_reps_.size());
    class_reps_.push_back(i);
    std::vector<int> orbit{i};
    subs_[i].cls = c;
    subs_[i].conjugator = 0;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (int gen : G.generators()) {
        const int j = conjugate(gen, orbit[k]);
        if (subs_[j].cls >= 0) continue;
        subs_[j].cls = c;
        subs_[j].conjugator = G.mul(gen, subs_[orbit[k]].conjugator);
        orbit.push_back(j);
      }
    std::sort(orbit.begin(), orbit.end());
    class_members_.push_back(std::move(orbit));
  }

  std::vector<std::string> names;
  std::map<std::string, int> counts;
  for (int c = 0; c < num_classes(); ++c) {
    const Subgroup& s = subs_[class_reps_[c]];
    std::vector<int> orders;
    bool abelian = true;
    for (int e : s.elems) orders.push_back(G.elem_order(e));
    for (int a : s.gens)
      for (int b : s.gens)
        if (G.mul(a, b) != G.mul(b, a)) abelian = false;
    names.push_back(structure_name(orders, abelian));
    ++counts[names.back()];
  }
  std::map<std::string, int> seen_names;
  for (int c = 0; c < num_classes(); ++c) {
    const std::string& nm = names[c];
    if (counts[nm] == 1)
      labels_.push_back(nm);
    else
      labels_.push_back(nm + "_" + std::to_string(++seen_names[nm]));
  }
}

int Lattice::find(const ElementSet& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : it->second;
}

int Lattice::find_elements(const std::vector<int>& elems) const {
  return find(ElementSet(g_->order(), elems));
}

int Lattice::conjugate(int g, int i) const {
  ElementSet s(g_->order());
  for (int e : subs_[i].elems) s.set(g_->conj(g, e));
  const int j = find(s);
  if (j < 0) throw std::logic_error("conjugate subgroup missing from lattice");
  return j;
}

int Lattice::normalizer_in(int u, int v) const {
  std::vector<int> elems;
  for (int g : subs_[v].elems) {
    bool ok = true;
    for (int x : subs_[u].gens)
      if (!subs_[u].set.test(g_->conj(g, x))) {
        ok = false;
        break;
      }
    if (ok) elems.push_back(g);
  }
  return find_elements(elems);
}

int Lattice::normalizer(int i) const { return normalizer_in(i, whole()); }

bool Lattice::is_normal(int i) const { return normalizer(i) == whole(); }

int Lattice::normal_closure_in(int u, int v) const {
  std::vector<int> gens;
  for (int g : subs_[v].elems)
    for (int x : subs_[u].gens) gens.push_back(g_->conj(g, x));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return find_elements(g_->closure(gens));
}

int Lattice::normal_closure(int i) const { return normal_closure_in(i, whole()); }

int Lattice::intersect(int i, int j) const { return find(subs_[i].set.intersect(subs_[j].set)); }

int Lattice::join(int i, int j) const {
  std::vector<int> gens = subs_[i].gens;
  gens.insert(gens.end(), subs_[j].gens.begin(), subs_[j].gens.end());
  return find_elements(g_->closure(gens));
}

int Lattice::p_residue(int i, int p) const {
  std::vector<int> gens;
  for (int e : subs_[i].elems)
    if (is_power_of(g_->elem_order(e), p)) gens.push_back(e);
  return find_elements(g_->closure(gens));
}

bool Lattice::is_p_group(int i, int p) const { return is_power_of(subs_[i].order(), p); }

std::vector<int> Lattice::p_subgroup_classes(int p) const {
  std::vector<int> out;
  for (int r : class_reps_)
    if (is_p_group(r, p)) out.push_back(r);
  return out;
}

long long Lattice::moebius(int u, int v) const {
  if (!contains(u, v)) return 0;
  std::lock_guard<std::mutex> lock(mu_);
  auto it = moebius_rows_.find(u);
  if (it == moebius_rows_.end()) {
    // subgroups are sorted by order, so every W < V precedes V
    std::vector<long long> row(size(), 0);
    row[u] = 1;
    for (int w = u + 1; w < size(); ++w) {
      if (!contains(u, w)) continue;
      long long s = 0;
      for (int x = u; x < w; ++x)
        if (row[x] != 0 && contains(x, w)) s += row[x];
      row[w] = -s;
    }
    it = moebius_rows_.emplace(u, std::move(row)).first;
  }
  return it->second[v];
}

}  // namespace ppcan
