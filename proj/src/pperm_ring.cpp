#include "ppcan/pperm_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace ppcan {

std::string element_class_label(const Group& g, int elem) {
  const int c = g.class_of(elem);
  const int o = g.elem_order(elem);
  int idx = 0;
  for (int k = 0; k < c; ++k)
    if (g.elem_order(g.class_reps()[k]) == o) ++idx;
  std::string s = std::to_string(o);
  s += static_cast<char>('a' + idx % 26);
  if (idx >= 26) s += std::to_string(idx / 26);
  return s;
}

IntVector apply(const IntVector& x, const IntMatrix& m, int cols) {
  IntVector out(cols, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < cols; ++j) out[j] += x[i] * m[i][j];
  }
  return out;
}

RationalVector apply(const RationalVector& x, const IntMatrix& m, int cols) {
  RationalVector out(cols);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < cols; ++j)
      if (m[i][j]) out[j] += x[i] * Rational(static_cast<long>(m[i][j]));
  }
  return out;
}

Hom conjugation_map(const GroupPtr& parent, int g, const GroupPtr& conj_sub, const GroupPtr& sub) {
  Hom h{conj_sub, sub, std::vector<int>(conj_sub->order())};
  const int ginv = parent->inv(g);
  for (int k = 0; k < conj_sub->order(); ++k) {
    const int y = parent->index_of(conj_sub->perm(k));
    const int x = parent->conj(ginv, y);
    h.image[k] = sub->index_of(parent->perm(x));
    if (h.image[k] < 0) throw std::invalid_argument("conjugation_map: image leaves the subgroup");
  }
  return h;
}

PPermRing::PPermRing(Session& s, GroupPtr g) : s_(&s), g_(std::move(g)) {
  classify();
  classify_qpairs();
}

void PPermRing::classify() {
  Session& s = *s_;
  const Lattice& lat = s.lattice(g_);
  for (int p_sub : lat.p_subgroup_classes(s.p())) {
    GroupPtr n = s.normalizer_group(g_, p_sub);
    const int p_in_n = s.locate(s.subgroup(g_, p_sub), n);
    const Quotient& q = s.quotient(n, p_in_n);
    const PimTable& pt = s.pims(q.group);
    const Hom incl = s.inclusion(n, g_);
    for (std::size_t j = 0; j < pt.pims.size(); ++j) {
      Module e = pullback(pt.pims[j].module, q.projection, "Inf(" + pt.pims[j].label + ")");
      Module ind = n == g_ ? e : induce(e, incl);
      int found = -1;
      std::vector<Summand> parts = n == g_ ? std::vector<Summand>{{e, FqMatrix::identity(e.field_ptr(), e.dim())}}
                                           : s.summands(ind);
      for (std::size_t k = 0; k < parts.size(); ++k) {
        if (s.brauer_quotient_dim(parts[k].module, p_sub) == 0) continue;
        if (found >= 0) throw std::logic_error("classification: several summands with the given vertex");
        found = static_cast<int>(k);
      }
      if (found < 0) throw std::logic_error("classification: no summand with the given vertex");
      PPermClass c;
      c.p_sub = p_sub;
      c.pim = static_cast<int>(j);
      c.label = "M(" + lat.label(p_sub) + "," + pt.pims[j].label + ")";
      c.module = parts[found].module.relabeled(c.label);
      c.inflated = e;
      c.exprojective = acts_trivially(c.module, lat.sub(p_sub).elems);
      basis_.push_back(std::move(c));
    }
  }
}

void PPermRing::classify_qpairs() {
  Session& s = *s_;
  const Lattice& lat = s.lattice(g_);
  for (int k = 0; k < lat.size(); ++k) {
    if (!lat.is_normal(k) || lat.p_residue(k, s.p()) != k) continue;
    const Quotient& q = s.quotient(g_, k);
    const PimTable& pt = s.pims(q.group);
    for (std::size_t j = 0; j < pt.pims.size(); ++j) {
      QPair qp;
      qp.k = k;
      qp.pim = static_cast<int>(j);
      qp.label = "(" + lat.label(k) + "," + pt.pims[j].label + ")";
      qp.module = pullback(pt.pims[j].module, q.projection, qp.label);
      qp.basis = match(qp.module);
      if (qp.basis < 0 || !basis_[qp.basis].exprojective || basis_[qp.basis].qpair >= 0)
        throw std::logic_error("exprojective classifications disagree at " + qp.label);
      basis_[qp.basis].qpair = static_cast<int>(qpairs_.size());
      qpairs_.push_back(std::move(qp));
    }
  }
  for (const auto& c : basis_)
    if (c.exprojective && c.qpair < 0) throw std::logic_error("exprojective basis module without a (K,F) pair: " + c.label);
}

int PPermRing::match(const Module& m) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].module.dim() == m.dim() && find_isomorphism(basis_[i].module, m, s_->config().seed))
      return static_cast<int>(i);
  return -1;
}

IntVector PPermRing::coordinates(const Module& m) const {
  IntVector out(basis_.size(), 0);
  if (m.dim() == 0) return out;
  for (const auto& part : s_->summands(m)) {
    const int i = match(part.module);
    if (i < 0) throw std::runtime_error("summand of dimension " + std::to_string(part.module.dim()) +
                                        " is not a classified p-permutation module");
    ++out[i];
  }
  return out;
}

const IntVector& PPermRing::product(int i, int j) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = std::minmax(i, j);
  auto it = products_.find(key);
  if (it != products_.end()) return it->second;
  IntVector c = coordinates(tensor(basis_[i].module, basis_[j].module));
  return products_.emplace(key, std::move(c)).first->second;
}

IntVector PPermRing::multiply(const IntVector& x, const IntVector& y) const {
  IntVector out(basis_.size(), 0);
  for (int i = 0; i < rank(); ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < rank(); ++j) {
      if (!y[j]) continue;
      const IntVector& c = product(i, j);
      for (int k = 0; k < rank(); ++k) out[k] += x[i] * y[j] * c[k];
    }
  }
  return out;
}

IntVector PPermRing::one() const { return coordinates(trivial_module(g_, s_->field())); }

bool PPermRing::exprojective_supported(const IntVector& x) const {
  for (int i = 0; i < rank(); ++i)
    if (x[i] && !basis_[i].exprojective) return false;
  return true;
}

const IntMatrix& PPermRing::pullback_matrix(const Hom& hom) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (hom.dst.get() != g_.get()) throw std::invalid_argument("pullback_matrix: hom target is not this group");
  auto key = std::make_pair(hom.src.get(), hom.image);
  auto it = pullbacks_.find(key);
  if (it != pullbacks_.end()) return it->second;
  const PPermRing& src = s_->pperm(hom.src);
  IntMatrix m;
  for (const auto& b : basis_) {
    Module pb = pullback(b.module, hom);
    // an isomorphism carries indecomposables to indecomposables
    const bool bijective = hom.src->order() == hom.dst->order() && hom.is_injective();
    const int direct = bijective ? src.match(pb) : -1;
    if (direct >= 0) {
      IntVector unit(src.rank(), 0);
      unit[direct] = 1;
      m.push_back(std::move(unit));
    } else {
      m.push_back(src.coordinates(pb));
    }
  }
  return pullbacks_.emplace(std::move(key), std::move(m)).first->second;
}

const IntMatrix& PPermRing::induction_matrix(const GroupPtr& h) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = inductions_.find(h.get());
  if (it != inductions_.end()) return it->second;
  const PPermRing& sub = s_->pperm(h);
  const Hom incl = s_->inclusion(h, g_);
  IntMatrix m;
  for (const auto& b : sub.basis()) m.push_back(h == g_ ? coordinates(b.module) : coordinates(induce(b.module, incl)));
  return inductions_.emplace(h.get(), std::move(m)).first->second;
}

const std::vector<SpeciesIndex>& PPermRing::species() const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (species_) return *species_;
  Session& s = *s_;
  const Lattice& lat = s.lattice(g_);
  std::vector<SpeciesIndex> out;
  for (int p_sub : lat.p_subgroup_classes(s.p())) {
    GroupPtr n = s.normalizer_group(g_, p_sub);
    const Quotient& q = s.quotient(n, s.locate(s.subgroup(g_, p_sub), n));
    for (int t : p_regular_class_reps(*q.group, s.p()))
      out.push_back({p_sub, t, "(" + lat.label(p_sub) + "," + element_class_label(*q.group, t) + ")"});
  }
  species_ = std::move(out);
  return *species_;
}

const CycMatrix& PPermRing::species_matrix() const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (species_matrix_) return *species_matrix_;
  const auto& sp = species();
  CycMatrix m(static_cast<int>(sp.size()), rank());
  std::map<std::pair<int, int>, Module> quotients;
  for (std::size_t k = 0; k < sp.size(); ++k)
    for (int i = 0; i < rank(); ++i) {
      auto key = std::make_pair(i, sp[k].p_sub);
      auto it = quotients.find(key);
      if (it == quotients.end()) it = quotients.emplace(key, s_->brauer_quotient(basis_[i].module, sp[k].p_sub)).first;
      m(static_cast<int>(k), i) = it->second.dim() ? brauer_character(it->second, sp[k].s) : Cyc(0L);
    }
  species_matrix_ = std::move(m);
  return *species_matrix_;
}

const std::vector<ExSpeciesIndex>& PPermRing::ex_species() const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (ex_species_) return *ex_species_;
  Session& s = *s_;
  const Lattice& lat = s.lattice(g_);
  std::vector<ExSpeciesIndex> out;
  for (int l = 0; l < lat.size(); ++l) {
    if (!lat.is_normal(l) || lat.p_residue(l, s.p()) != l) continue;
    const Quotient& q = s.quotient(g_, l);
    for (int t : p_regular_class_reps(*q.group, s.p()))
      out.push_back({l, t, "(" + lat.label(l) + "," + element_class_label(*q.group, t) + ")"});
  }
  ex_species_ = std::move(out);
  return *ex_species_;
}

Cyc PPermRing::ex_species_value(int idx, const Module& m) const {
  const ExSpeciesIndex& sp = ex_species()[idx];
  const Lattice& lat = s_->lattice(g_);
  if (!acts_trivially(m, lat.sub(sp.l).elems)) return Cyc(0L);
  const Quotient& q = s_->quotient(g_, sp.l);
  for (int h = 0; h < g_->order(); ++h)
    if (q.projection(h) == sp.t && g_->elem_order(h) % s_->p() != 0) return brauer_character(m, h);
  throw std::logic_error("no p-regular preimage of a p-regular element");
}

const CycMatrix& PPermRing::ex_species_matrix() const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (ex_species_matrix_) return *ex_species_matrix_;
  const auto& sp = ex_species();
  CycMatrix m(static_cast<int>(sp.size()), ex_rank());
  for (std::size_t k = 0; k < sp.size(); ++k)
    for (int q = 0; q < ex_rank(); ++q) m(static_cast<int>(k), q) = ex_species_value(static_cast<int>(k), qpairs_[q].module);
  ex_species_matrix_ = std::move(m);
  return *ex_species_matrix_;
}

const std::vector<CycVector>& PPermRing::idempotents() const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (idempotents_) return *idempotents_;
  const CycMatrix& sm = species_matrix();
  if (sm.rows() != sm.cols()) throw std::logic_error("species matrix is not square");
  auto inv = sm.inverse();
  if (!inv) throw std::logic_error("species matrix is singular");
  std::vector<CycVector> out;
  for (int k = 0; k < sm.rows(); ++k) out.push_back(inv->col(k));
  idempotents_ = std::move(out);
  return *idempotents_;
}

}  // namespace ppcan
