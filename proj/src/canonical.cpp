#include "ppcan/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ppcan {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

int unit_position(const IntVector& v) {
  int pos = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] != 1 || pos >= 0) return -1;
    pos = static_cast<int>(i);
  }
  return pos;
}

// Right double coset representatives of A x B (A, B given by element sets of g).
std::vector<int> double_coset_reps(const Group& g, const std::vector<int>& a, const std::vector<int>& b) {
  ElementSet seen(g.order());
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (seen.test(x)) continue;
    reps.push_back(x);
    for (int u : a) {
      const int ux = g.mul(u, x);
      for (int v : b) seen.set(g.mul(ux, v));
    }
  }
  return reps;
}

bool contains_sorted(const std::vector<int>& sorted, int x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

}  // namespace

CofixedRing::CofixedRing(Session& s, GroupPtr g) : s_(&s), g_(std::move(g)) { enumerate(); }

GroupPtr CofixedRing::subgroup_group(int u) const { return s_->subgroup(g_, u); }

const PPermRing& CofixedRing::local(int u) const { return s_->pperm(subgroup_group(u)); }

const PPermRing& CofixedRing::top() const { return s_->pperm(g_); }

void CofixedRing::enumerate() {
  const Lattice& lat = s_->lattice(g_);
  const Group& g = *g_;
  for (int c = 0; c < lat.num_classes(); ++c) {
    const int u = lat.class_rep(c);
    GroupPtr ug = subgroup_group(u);
    const PPermRing& tu = s_->pperm(ug);
    UnionFind uf(tu.ex_rank());
    for (int n : lat.sub(lat.normalizer(u)).gens) {
      const IntMatrix& pm = tu.pullback_matrix(conjugation_map(g_, n, ug, ug));
      for (int q = 0; q < tu.ex_rank(); ++q) {
        const int b = unit_position(pm[tu.qpairs()[q].basis]);
        if (b < 0 || tu.basis()[b].qpair < 0) throw std::logic_error("conjugation does not permute the exprojective basis");
        uf.join(q, tu.basis()[b].qpair);
      }
    }
    std::vector<int> idx(tu.ex_rank(), -1);
    const Lattice& ulat = s_->lattice(ug);
    for (int q = 0; q < tu.ex_rank(); ++q) {
      const int root = uf.find(q);
      if (root != q) continue;
      const QPair& qp = tu.qpairs()[q];
      RClass r;
      r.u = u;
      r.qpair = q;
      r.u_label = lat.label(u);
      r.k_label = ulat.label(qp.k);
      r.f_label = s_->pims(s_->quotient(ug, qp.k).group).pims[qp.pim].label;
      r.label = "[" + r.u_label + "," + qp.label + "]";
      idx[q] = static_cast<int>(basis_.size());
      basis_.push_back(std::move(r));
    }
    for (int q = 0; q < tu.ex_rank(); ++q) idx[q] = idx[uf.find(q)];
    index_[u] = std::move(idx);
  }
  (void)g;
}

void CofixedRing::add_transported(RationalVector& out, int rep, const Hom& hom, const PPermRing& ring_a,
                                  const RationalVector& x, const Rational& weight) const {
  const PPermRing& tr = local(rep);
  if (hom.src.get() != tr.group().get()) throw std::invalid_argument("add_transported: hom source is not the representative");
  const RationalVector z = apply(ring_a.embed_ex(x), ring_a.pullback_matrix(hom), tr.rank());
  for (int i = 0; i < tr.rank(); ++i)
    if (sgn(z[i]) != 0 && !tr.basis()[i].exprojective)
      throw std::logic_error("restriction of an exprojective module has a non-exprojective summand");
  const auto& idx = index_.at(rep);
  for (int q = 0; q < tr.ex_rank(); ++q) {
    const Rational& c = z[tr.qpairs()[q].basis];
    if (sgn(c) != 0) out[idx[q]] += weight * c;
  }
}

RationalVector CofixedRing::embed(int u, const RationalVector& x) const {
  const Lattice& lat = s_->lattice(g_);
  const int rep = lat.class_rep(lat.class_of(u));
  const int c = lat.sub(u).conjugator;
  GroupPtr ug = subgroup_group(u);
  const Group& g = *g_;
  Hom h = hom_via(g, subgroup_group(rep), ug, [&](int y) { return g.conj(c, y); });
  RationalVector out(rank());
  add_transported(out, rep, h, s_->pperm(ug), x, Rational(1));
  return out;
}

const RationalVector& CofixedRing::product(int a, int b) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = std::make_pair(a, b);
  if (auto it = products_.find(key); it != products_.end()) return it->second;
  const Lattice& lat = s_->lattice(g_);
  const Group& g = *g_;
  const RClass& ra = basis_[a];
  const RClass& rb = basis_[b];
  GroupPtr ug = subgroup_group(ra.u), vg = subgroup_group(rb.u);
  const PPermRing& tu = s_->pperm(ug);
  const PPermRing& tv = s_->pperm(vg);
  const auto& uel = lat.sub(ra.u).elems;
  const auto& vel = lat.sub(rb.u).elems;
  RationalVector out(rank());
  for (int x : double_coset_reps(g, uel, vel)) {
    const int xinv = g.inv(x);
    std::vector<int> w;
    for (int y : uel)
      if (contains_sorted(vel, g.conj(xinv, y))) w.push_back(y);
    const int wi = lat.find_elements(w);
    const int rep = lat.class_rep(lat.class_of(wi));
    const int c = lat.sub(wi).conjugator;
    GroupPtr rg = subgroup_group(rep);
    const PPermRing& tr = s_->pperm(rg);
    Hom h1 = hom_via(g, rg, ug, [&](int y) { return g.conj(c, y); });
    Hom h2 = hom_via(g, rg, vg, [&](int y) { return g.conj(xinv, g.conj(c, y)); });
    const IntVector x1 = tu.pullback_matrix(h1)[tu.qpairs()[ra.qpair].basis];
    const IntVector x2 = tv.pullback_matrix(h2)[tv.qpairs()[rb.qpair].basis];
    const IntVector prod = tr.multiply(x1, x2);
    if (!tr.exprojective_supported(x1) || !tr.exprojective_supported(x2) || !tr.exprojective_supported(prod))
      throw std::logic_error("product left the exprojective span");
    const auto& idx = index_.at(rep);
    for (int q = 0; q < tr.ex_rank(); ++q) {
      const long long c2 = prod[tr.qpairs()[q].basis];
      if (c2) out[idx[q]] += Rational(static_cast<long>(c2));
    }
  }
  return products_.emplace(key, std::move(out)).first->second;
}

RationalVector CofixedRing::multiply(const RationalVector& x, const RationalVector& y) const {
  RationalVector out(rank());
  for (int a = 0; a < rank(); ++a) {
    if (sgn(x[a]) == 0) continue;
    for (int b = 0; b < rank(); ++b) {
      if (sgn(y[b]) == 0) continue;
      const Rational w = x[a] * y[b];
      const RationalVector& p = product(a, b);
      for (int k = 0; k < rank(); ++k)
        if (sgn(p[k]) != 0) out[k] += w * p[k];
    }
  }
  return out;
}

CycVector CofixedRing::multiply(const CycVector& x, const CycVector& y) const {
  CycVector out(rank());
  for (int a = 0; a < rank(); ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < rank(); ++b) {
      if (y[b].is_zero()) continue;
      const Cyc w = x[a] * y[b];
      const RationalVector& p = product(a, b);
      for (int k = 0; k < rank(); ++k)
        if (sgn(p[k]) != 0) out[k] += w * Cyc(p[k]);
    }
  }
  return out;
}

RationalVector CofixedRing::restrict_to(const CofixedRing& h, const RationalVector& x) const {
  const Lattice& lat = s_->lattice(g_);
  const Lattice& hlat = s_->lattice(h.group());
  const Group& g = *g_;
  const Group& hg = *h.group();
  std::vector<int> hel;
  for (int k = 0; k < hg.order(); ++k) {
    const int e = g.index_of(hg.perm(k));
    if (e < 0) throw std::invalid_argument("restrict_to: not a subgroup");
    hel.push_back(e);
  }
  std::sort(hel.begin(), hel.end());
  RationalVector out(h.rank());
  for (int a = 0; a < rank(); ++a) {
    if (sgn(x[a]) == 0) continue;
    const RClass& ra = basis_[a];
    GroupPtr ug = subgroup_group(ra.u);
    const PPermRing& tu = s_->pperm(ug);
    const auto& uel = lat.sub(ra.u).elems;
    RationalVector unit(tu.ex_rank());
    unit[ra.qpair] = 1;
    for (int t : double_coset_reps(g, hel, uel)) {
      const int tinv = g.inv(t);
      std::vector<int> w;
      for (int y : hel)
        if (contains_sorted(uel, g.conj(tinv, y))) w.push_back(hg.index_of(g.perm(y)));
      std::sort(w.begin(), w.end());
      const int wi = hlat.find_elements(w);
      const int rep = hlat.class_rep(hlat.class_of(wi));
      const int c = g.index_of(hg.perm(hlat.sub(wi).conjugator));
      Hom hom = hom_via(g, h.subgroup_group(rep), ug, [&](int y) { return g.conj(tinv, g.conj(c, y)); });
      h.add_transported(out, rep, hom, tu, unit, x[a]);
    }
  }
  return out;
}

RationalVector CofixedRing::isogate(const Hom& aut, const RationalVector& x) const {
  const Lattice& lat = s_->lattice(g_);
  const Group& g = *g_;
  std::vector<int> inv(g.order());
  for (int y = 0; y < g.order(); ++y) inv[aut.image[y]] = y;
  RationalVector out(rank());
  for (int a = 0; a < rank(); ++a) {
    if (sgn(x[a]) == 0) continue;
    const RClass& ra = basis_[a];
    GroupPtr ug = subgroup_group(ra.u);
    const PPermRing& tu = s_->pperm(ug);
    std::vector<int> pre;
    for (int y : lat.sub(ra.u).elems) pre.push_back(inv[y]);
    std::sort(pre.begin(), pre.end());
    const int wi = lat.find_elements(pre);
    const int rep = lat.class_rep(lat.class_of(wi));
    const int c = lat.sub(wi).conjugator;
    Hom hom = hom_via(g, subgroup_group(rep), ug, [&](int y) { return aut.image[g.conj(c, y)]; });
    RationalVector unit(tu.ex_rank());
    unit[ra.qpair] = 1;
    add_transported(out, rep, hom, tu, unit, x[a]);
  }
  return out;
}

const IntMatrix& CofixedRing::lin_matrix() const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (lin_) return *lin_;
  const PPermRing& t = top();
  IntMatrix m;
  for (const auto& r : basis_) {
    const PPermRing& tu = local(r.u);
    m.push_back(t.induction_matrix(subgroup_group(r.u))[tu.qpairs()[r.qpair].basis]);
  }
  lin_ = std::move(m);
  return *lin_;
}

RationalVector CofixedRing::lin(const RationalVector& x) const { return apply(x, lin_matrix(), top().rank()); }

CycVector CofixedRing::lin(const CycVector& x) const {
  const IntMatrix& m = lin_matrix();
  CycVector out(top().rank());
  for (int a = 0; a < rank(); ++a) {
    if (x[a].is_zero()) continue;
    for (int j = 0; j < top().rank(); ++j)
      if (m[a][j]) out[j] += x[a] * Cyc(static_cast<long>(m[a][j]));
  }
  return out;
}

RationalVector CofixedRing::can(const RationalVector& xi, bool literal) const {
  const Lattice& lat = s_->lattice(g_);
  const Group& g = *g_;
  const PPermRing& t = top();
  RationalVector out(rank());
  const Rational order(g.order());
  for (int v = 0; v < lat.size(); ++v) {
    if (!literal && !lat.is_class_rep(v)) continue;
    GroupPtr vg = subgroup_group(v);
    const PPermRing& tv = s_->pperm(vg);
    const RationalVector y = tv.pi(apply(xi, t.pullback_matrix(s_->inclusion(vg, g_)), tv.rank()));
    bool zero = true;
    for (const auto& c : y) zero = zero && sgn(c) == 0;
    if (zero) continue;
    const Rational class_weight(literal ? 1L : static_cast<long>(lat.class_members(lat.class_of(v)).size()));
    for (int u = 0; u < lat.size(); ++u) {
      if (!lat.contains(u, v)) continue;
      const long long mu = lat.moebius(u, v);
      if (mu == 0) continue;
      const Rational weight = class_weight * Rational(static_cast<long>(lat.sub(u).order() * mu)) / order;
      if (literal) {
        GroupPtr ug = subgroup_group(u);
        const PPermRing& tu = s_->pperm(ug);
        const RationalVector z = apply(tv.embed_ex(y), tv.pullback_matrix(s_->inclusion(ug, vg)), tu.rank());
        for (int i = 0; i < tu.rank(); ++i)
          if (sgn(z[i]) != 0 && !tu.basis()[i].exprojective)
            throw std::logic_error("restriction of an exprojective module has a non-exprojective summand");
        const RationalVector e = embed(u, tu.pi(z));
        for (int k = 0; k < rank(); ++k)
          if (sgn(e[k]) != 0) out[k] += weight * e[k];
      } else {
        const int rep = lat.class_rep(lat.class_of(u));
        const int c = lat.sub(u).conjugator;
        Hom hom = hom_via(g, subgroup_group(rep), vg, [&](int w) { return g.conj(c, w); });
        add_transported(out, rep, hom, tv, y, weight);
      }
    }
  }
  return out;
}

const RationalVector& CofixedRing::can_basis(int i, bool literal) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = std::make_pair(i, literal);
  if (auto it = can_.find(key); it != can_.end()) return it->second;
  RationalVector xi(top().rank());
  xi[i] = 1;
  return can_.emplace(key, can(xi, literal)).first->second;
}

const RationalVector& CofixedRing::identity() const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (identity_) return *identity_;
  const int n = rank();
  RationalMatrix a(n * n, n);
  RationalVector rhs(static_cast<std::size_t>(n) * n);
  for (int b = 0; b < n; ++b)
    for (int e = 0; e < n; ++e) {
      const RationalVector& p = product(e, b);
      for (int k = 0; k < n; ++k) a(b * n + k, e) = p[k];
    }
  for (int b = 0; b < n; ++b) rhs[static_cast<std::size_t>(b) * n + b] = 1;
  auto sol = a.solve(rhs);
  if (!sol) throw std::logic_error("the cofixed ring has no identity element");
  identity_ = std::move(*sol);
  return *identity_;
}

int CofixedRing::ex_species_index(const PPermRing& tv, int l, int t_in_v) const {
  const Quotient& q = s_->quotient(tv.group(), l);
  const int image = q.projection(t_in_v);
  const auto& sp = tv.ex_species();
  for (std::size_t k = 0; k < sp.size(); ++k)
    if (sp[k].l == l && q.group->class_of(sp[k].t) == q.group->class_of(image)) return static_cast<int>(k);
  throw std::logic_error("element is not p-regular modulo the normal subgroup");
}

const std::vector<KClass>& CofixedRing::k_classes() const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (k_classes_) return *k_classes_;
  const Lattice& lat = s_->lattice(g_);
  const Group& g = *g_;
  std::vector<KClass> out;
  for (int c = 0; c < lat.num_classes(); ++c) {
    const int v = lat.class_rep(c);
    GroupPtr vg = subgroup_group(v);
    const Group& vgr = *vg;
    const PPermRing& tv = s_->pperm(vg);
    const Lattice& vlat = s_->lattice(vg);
    const auto& sp = tv.ex_species();
    UnionFind uf(static_cast<int>(sp.size()));
    for (int n : lat.sub(lat.normalizer(v)).gens) {
      auto conj_in_v = [&](int y) { return vgr.index_of(g.perm(g.conj(n, g.index_of(vgr.perm(y))))); };
      for (std::size_t k = 0; k < sp.size(); ++k) {
        std::vector<int> l2;
        for (int y : vlat.sub(sp[k].l).elems) l2.push_back(conj_in_v(y));
        std::sort(l2.begin(), l2.end());
        const int l2i = vlat.find_elements(l2);
        const Quotient& q = s_->quotient(vg, sp[k].l);
        int pre = -1;
        for (int y = 0; y < vgr.order() && pre < 0; ++y)
          if (q.projection(y) == sp[k].t) pre = y;
        uf.join(static_cast<int>(k), ex_species_index(tv, l2i, conj_in_v(pre)));
      }
    }
    std::vector<int> idx(sp.size(), -1);
    for (std::size_t k = 0; k < sp.size(); ++k) {
      if (uf.find(static_cast<int>(k)) != static_cast<int>(k)) continue;
      idx[k] = static_cast<int>(out.size());
      out.push_back({v, static_cast<int>(k), "[" + lat.label(v) + "," + sp[k].label + "]"});
    }
    for (std::size_t k = 0; k < sp.size(); ++k) idx[k] = idx[uf.find(static_cast<int>(k))];
    k_index_[v] = std::move(idx);
  }
  k_classes_ = std::move(out);
  return *k_classes_;
}

int CofixedRing::k_class_of(int v, int l, int t) const {
  k_classes();
  const Lattice& lat = s_->lattice(g_);
  const Group& g = *g_;
  const int rep = lat.class_rep(lat.class_of(v));
  const int cinv = g.inv(lat.sub(v).conjugator);
  GroupPtr vg = subgroup_group(rep);
  const Group& vgr = *vg;
  const Lattice& vlat = s_->lattice(vg);
  std::vector<int> l2;
  for (int y : lat.sub(l).elems) l2.push_back(vgr.index_of(g.perm(g.conj(cinv, y))));
  std::sort(l2.begin(), l2.end());
  const int l2i = vlat.find_elements(l2);
  if (l2i < 0) throw std::invalid_argument("k_class_of: L is not inside V");
  const int t2 = vgr.index_of(g.perm(g.conj(cinv, t)));
  return k_index_.at(rep)[ex_species_index(s_->pperm(vg), l2i, t2)];
}

const CycMatrix& CofixedRing::species_matrix() const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (species_) return *species_;
  const auto& kc = k_classes();
  CycMatrix m(static_cast<int>(kc.size()), rank());
  std::map<int, std::vector<RationalVector>> restricted;  // v -> restriction of each basis element
  for (std::size_t k = 0; k < kc.size(); ++k) {
    const int v = kc[k].v;
    GroupPtr vg = subgroup_group(v);
    const CofixedRing& cv = s_->cofixed(vg);
    const PPermRing& tv = s_->pperm(vg);
    const int top_v = s_->lattice(vg).whole();
    auto it = restricted.find(v);
    if (it == restricted.end()) {
      std::vector<RationalVector> rows;
      for (int a = 0; a < rank(); ++a) {
        RationalVector unit(rank());
        unit[a] = 1;
        rows.push_back(restrict_to(cv, unit));
      }
      it = restricted.emplace(v, std::move(rows)).first;
    }
    const CycMatrix& ex = tv.ex_species_matrix();
    for (int a = 0; a < rank(); ++a) {
      Cyc val(0L);
      for (int q = 0; q < tv.ex_rank(); ++q) {
        const Rational& c = it->second[a][cv.index(top_v, q)];
        if (sgn(c) != 0) val += Cyc(c) * ex(kc[k].ex_species, q);
      }
      m(static_cast<int>(k), a) = val;
    }
  }
  species_ = std::move(m);
  return *species_;
}

const std::vector<CycVector>& CofixedRing::idempotents() const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (idempotents_) return *idempotents_;
  const CycMatrix& sm = species_matrix();
  if (sm.rows() != sm.cols()) throw std::logic_error("species matrix of the cofixed ring is not square");
  auto inv = sm.inverse();
  if (!inv) throw std::logic_error("species matrix of the cofixed ring is singular");
  std::vector<CycVector> out;
  for (int k = 0; k < sm.rows(); ++k) out.push_back(inv->col(k));
  idempotents_ = std::move(out);
  return *idempotents_;
}

std::vector<Hom> automorphism_generators(const GroupPtr& gp) {
  const Group& g = *gp;
  const auto& gens = g.generators();
  const int n = g.order();
  std::vector<int> order_bfs;  // elements with parents before children
  {
    std::vector<char> done(n, 0);
    done[0] = 1;
    order_bfs.push_back(0);
    bool progress = true;
    while (progress) {
      progress = false;
      for (int e = 1; e < n; ++e)
        if (!done[e] && done[g.word_parent(e)]) {
          done[e] = 1;
          order_bfs.push_back(e);
          progress = true;
        }
    }
  }
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int e = 0; e < n; ++e)
      if (g.elem_order(e) == g.elem_order(gens[i])) candidates[i].push_back(e);

  std::vector<Hom> all;
  std::vector<std::size_t> pick(gens.size(), 0);
  while (true) {
    std::vector<int> img(n, -1);
    img[0] = 0;
    for (int e : order_bfs)
      if (e) img[e] = g.mul(img[g.word_parent(e)], candidates[g.word_gen(e)][pick[g.word_gen(e)]]);
    Hom h{gp, gp, img};
    if (h.is_injective() && h.is_homomorphism()) all.push_back(std::move(h));
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == candidates[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }

  // greedy generating set: keep an automorphism unless it lies in the group generated so far
  std::vector<Hom> out;
  std::set<std::vector<int>> generated{identity_hom(gp).image};
  for (const auto& h : all) {
    if (generated.count(h.image)) continue;
    out.push_back(h);
    std::vector<std::vector<int>> frontier(generated.begin(), generated.end());
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& f : frontier)
        for (const auto& gen : out) {
          std::vector<int> comp(n);
          for (int x = 0; x < n; ++x) comp[x] = gen.image[f[x]];
          if (generated.insert(comp).second) next.push_back(std::move(comp));
        }
      frontier = std::move(next);
    }
  }
  return out;
}

}  // namespace ppcan
