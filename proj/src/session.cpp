#include "ppcan/session.hpp"

#include <algorithm>
#include <stdexcept>

#include "ppcan/canonical.hpp"
#include "ppcan/pperm_ring.hpp"

namespace ppcan {

int PimTable::find(const Module& m, std::uint64_t seed) const {
  for (std::size_t i = 0; i < pims.size(); ++i)
    if (pims[i].module.dim() == m.dim() && find_isomorphism(pims[i].module, m, seed)) return static_cast<int>(i);
  return -1;
}

Session::Session(GroupPtr ambient, Config cfg) : cfg_(cfg) {
  if (!is_prime(cfg_.p)) throw std::invalid_argument("p must be prime");
  if (cfg_.max_order < 1 || cfg_.max_dim < 1) throw std::invalid_argument("caps must be positive");
  if (ambient->order() > cfg_.max_order) throw std::runtime_error("group order exceeds the configured cap");
  ambient_ = intern(ambient);
  field_ = Field::build(cfg_.p, p_prime_part(ambient_->exponent(), cfg_.p));
}

Session::~Session() = default;

GroupPtr Session::intern(const GroupPtr& g) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = std::make_pair(g->degree(), g->perms());
  auto it = registry_.find(key);
  if (it != registry_.end()) return it->second;
  registry_.emplace(std::move(key), g);
  return g;
}

const Lattice& Session::lattice(const GroupPtr& g) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto& slot = lattices_[g.get()];
  if (!slot) slot = std::make_unique<Lattice>(g);
  return *slot;
}

GroupPtr Session::subgroup(const GroupPtr& g, int sub) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  const Lattice& lat = lattice(g);
  const auto& elems = lat.sub(sub).elems;
  if (static_cast<int>(elems.size()) == g->order()) return g;
  std::vector<Perm> perms;
  perms.reserve(elems.size());
  for (int e : elems) perms.push_back(g->perm(e));
  auto key = std::make_pair(g->degree(), perms);
  auto it = registry_.find(key);
  if (it != registry_.end()) return it->second;
  return intern(Group::from_elements(g->degree(), std::move(perms), lat.label(sub)));
}

int Session::locate(const GroupPtr& h, const GroupPtr& g) {
  std::vector<int> elems;
  elems.reserve(h->order());
  for (const auto& p : h->perms()) {
    const int e = g->index_of(p);
    if (e < 0) throw std::invalid_argument("locate: group is not contained in the target");
    elems.push_back(e);
  }
  std::sort(elems.begin(), elems.end());
  const int i = lattice(g).find_elements(elems);
  if (i < 0) throw std::logic_error("locate: subgroup missing from lattice");
  return i;
}

Hom Session::inclusion(const GroupPtr& h, const GroupPtr& g) {
  Hom hom{h, g, std::vector<int>(h->order())};
  for (int k = 0; k < h->order(); ++k) {
    hom.image[k] = g->index_of(h->perm(k));
    if (hom.image[k] < 0) throw std::invalid_argument("inclusion: not a subgroup");
  }
  return hom;
}

std::vector<int> Session::map_elements(const GroupPtr& g, const std::vector<int>& elems, const GroupPtr& h) {
  std::vector<int> out;
  out.reserve(elems.size());
  for (int e : elems) {
    const int x = h->index_of(g->perm(e));
    if (x < 0) throw std::invalid_argument("map_elements: element outside the target group");
    out.push_back(x);
  }
  return out;
}

const Quotient& Session::quotient(const GroupPtr& g, int normal_sub) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = std::make_pair(g.get(), normal_sub);
  if (auto it = quotients_.find(key); it != quotients_.end()) return it->second;
  const Lattice& lat = lattice(g);
  if (!lat.is_normal(normal_sub)) throw std::invalid_argument("quotient by a subgroup that is not normal");
  if (normal_sub == lat.trivial()) return quotients_.emplace(key, Quotient{g, identity_hom(g)}).first->second;
  const auto& k = lat.sub(normal_sub).elems;
  std::vector<int> coset_of(g->order(), -1), reps;
  for (int x = 0; x < g->order(); ++x) {
    if (coset_of[x] >= 0) continue;
    for (int h : k) coset_of[g->mul(h, x)] = static_cast<int>(reps.size());
    reps.push_back(x);
  }
  const int n = static_cast<int>(reps.size());
  std::vector<Perm> action(g->order(), Perm(n));
  for (int x = 0; x < g->order(); ++x)
    for (int i = 0; i < n; ++i) action[x][i] = static_cast<std::uint16_t>(coset_of[g->mul(reps[i], x)]);
  std::vector<Perm> elems = action;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  GroupPtr q = intern(Group::from_elements(n, std::move(elems)));
  Hom proj{g, q, std::vector<int>(g->order())};
  for (int x = 0; x < g->order(); ++x) proj.image[x] = q->index_of(action[x]);
  if (proj.kernel() != k) throw std::logic_error("coset action has the wrong kernel");
  return quotients_.emplace(key, Quotient{q, std::move(proj)}).first->second;
}

const PimTable& Session::pims(const GroupPtr& h) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto& slot = pims_[h.get()];
  if (slot) return *slot;
  auto table = std::make_unique<PimTable>();
  table->group = h;
  table->p_regular_classes = p_regular_class_reps(*h, cfg_.p);
  Decomposition dec = decompose(regular_module(h, field_));
  for (const auto& part : dec.parts) {
    Pim pim{part.module, {}, part.multiplicity, {}};
    for (int c : table->p_regular_classes) pim.brauer.push_back(brauer_character(part.module, c));
    table->pims.push_back(std::move(pim));
  }
  std::sort(table->pims.begin(), table->pims.end(), [](const Pim& a, const Pim& b) {
    if (a.module.dim() != b.module.dim()) return a.module.dim() < b.module.dim();
    return std::lexicographical_compare(a.brauer.begin(), a.brauer.end(), b.brauer.begin(), b.brauer.end(),
                                        [](const Cyc& x, const Cyc& y) { return lex_less(x, y); });
  });
  int total = 0;
  std::map<int, int> per_dim;
  for (auto& pim : table->pims) {
    total += pim.module.dim() * pim.multiplicity;
    const int idx = per_dim[pim.module.dim()]++;
    std::string suffix(1, static_cast<char>('a' + idx % 26));
    if (idx >= 26) suffix += std::to_string(idx / 26);
    pim.label = std::to_string(pim.module.dim()) + suffix;
    pim.module = pim.module.relabeled(pim.label);
  }
  if (total != h->order()) throw std::logic_error("PIM dimensions do not add up to the group order");
  if (table->pims.size() != table->p_regular_classes.size())
    throw std::logic_error("PIM count differs from the number of p-regular classes: field too small");
  slot = std::move(table);
  return *slot;
}

const PPermRing& Session::pperm(const GroupPtr& h) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto& slot = rings_[h.get()];
  if (!slot) slot = std::make_unique<PPermRing>(*this, h);
  return *slot;
}

const CofixedRing& Session::cofixed(const GroupPtr& h) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto& slot = cofixed_[h.get()];
  if (!slot) slot = std::make_unique<CofixedRing>(*this, h);
  return *slot;
}

Decomposition Session::decompose(const Module& m) {
  if (m.dim() > cfg_.max_dim)
    throw std::runtime_error("module dimension " + std::to_string(m.dim()) + " exceeds the configured cap");
  return ppcan::decompose(m, cfg_.seed);
}

std::vector<Summand> Session::summands(const Module& m) {
  if (m.dim() > cfg_.max_dim)
    throw std::runtime_error("module dimension " + std::to_string(m.dim()) + " exceeds the configured cap");
  return indecomposable_summands(m, cfg_.seed);
}

bool Session::isomorphic(const Module& a, const Module& b) { return is_isomorphic(a, b, cfg_.seed); }

Session::BrauerSpace Session::brauer_space(const Module& m, int p_sub) {
  const GroupPtr& g = m.group_ptr();
  const Lattice& lat = lattice(g);
  const Subgroup& p = lat.sub(p_sub);
  if (!lat.is_p_group(p_sub, cfg_.p)) throw std::invalid_argument("Brauer quotient at a subgroup that is not a p-group");
  BrauerSpace out;
  out.fixed = fixed_points(m, p.elems);
  out.traces = FqMatrix(m.field_ptr(), 0, m.dim());
  if (p.order() > 1 && out.fixed.rows() > 0) {
    for (int q = 0; q < lat.size(); ++q) {
      if (lat.sub(q).order() * cfg_.p != p.order() || !lat.contains(q, p_sub)) continue;
      FqMatrix fq = fixed_points(m, lat.sub(q).elems);
      if (fq.rows() == 0) continue;
      // right transversal of Q in P
      FqMatrix tr(m.field_ptr(), m.dim(), m.dim());
      ElementSet seen(g->order());
      for (int t : p.elems) {
        if (seen.test(t)) continue;
        for (int x : lat.sub(q).elems) seen.set(g->mul(x, t));
        tr = tr + m.action(t);
      }
      out.traces = out.traces.vstack(fq * tr);
    }
  }
  if (out.traces.rows()) out.traces = rref(out.traces).reduced;
  out.complement = complement_rows(Subspace(out.traces), out.fixed);
  return out;
}

int Session::brauer_quotient_dim(const Module& m, int p_sub) { return brauer_space(m, p_sub).complement.rows(); }

GroupPtr Session::normalizer_group(const GroupPtr& g, int sub) { return subgroup(g, lattice(g).normalizer(sub)); }

Module Session::brauer_quotient(const Module& m, int p_sub) {
  const GroupPtr& g = m.group_ptr();
  const Lattice& lat = lattice(g);
  BrauerSpace bs = brauer_space(m, p_sub);
  GroupPtr n = normalizer_group(g, p_sub);
  const int p_in_n = locate(subgroup(g, p_sub), n);
  const Quotient& q = quotient(n, p_in_n);
  const FqMatrix full = bs.traces.rows() ? bs.traces.vstack(bs.complement) : bs.complement;
  const int t = bs.traces.rows(), c = bs.complement.rows();
  std::vector<FqMatrix> gens;
  for (int qg : q.group->generators()) {
    int pre = -1;
    for (int x = 0; x < n->order(); ++x)
      if (q.projection(x) == qg) {
        pre = x;
        break;
      }
    const int in_g = g->index_of(n->perm(pre));
    if (c == 0) {
      gens.emplace_back(m.field_ptr(), 0, 0);
      continue;
    }
    auto sol = solve_left(full, bs.complement * m.action(in_g));
    if (!sol) throw std::logic_error("Brauer quotient: fixed points not invariant under the normalizer");
    gens.push_back(sol->particular.submatrix(0, t, c, c));
  }
  (void)lat;
  return Module(q.group, m.field_ptr(), c, std::move(gens), m.label() + "(" + lattice(g).label(p_sub) + ")");
}

int Session::vertex(const Module& m) {
  const GroupPtr& g = m.group_ptr();
  const Lattice& lat = lattice(g);
  int best = -1;
  std::vector<int> nonzero;
  for (int r : lat.p_subgroup_classes(cfg_.p))
    if (brauer_quotient_dim(m, r) > 0) nonzero.push_back(r);
  if (nonzero.empty()) throw std::invalid_argument("vertex: module has no nonzero Brauer quotient");
  for (int r : nonzero)
    if (best < 0 || lat.sub(r).order() > lat.sub(best).order()) best = r;
  // every P with M(P) != 0 lies in a conjugate of the vertex
  for (int r : nonzero) {
    bool inside = false;
    for (int c : lat.class_members(lat.class_of(best)))
      if (lat.contains(r, c)) inside = true;
    if (!inside) throw std::logic_error("vertex: Brauer quotients are not controlled by a single subgroup");
  }
  return best;
}

}  // namespace ppcan
