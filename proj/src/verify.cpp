#include "ppcan/verify.hpp"

#include <algorithm>

#include "ppcan/named_groups.hpp"

namespace ppcan {

void CheckList::add(int criterion, std::string name, bool pass, std::string detail) {
  checks_.push_back({criterion, std::move(name), pass, std::move(detail)});
}

void CheckList::append(const CheckList& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool CheckList::all_pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

bool CheckList::all_pass(int criterion) const {
  return std::all_of(checks_.begin(), checks_.end(), [&](const Check& c) { return c.criterion != criterion || c.pass; });
}

nlohmann::json CheckList::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json j{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    out.push_back(std::move(j));
  }
  return out;
}

namespace {

// Accumulates failures of one identity into a short counterexample string.
class Tally {
 public:
  void require(bool ok, const std::string& where) {
    ++total_;
    if (ok) return;
    if (failed_++ == 0) first_ = where;
  }
  bool pass() const { return failed_ == 0; }
  std::string detail() const {
    if (failed_ == 0) return std::to_string(total_) + " instances";
    return std::to_string(failed_) + " of " + std::to_string(total_) + " fail, first at " + first_;
  }
  void report(CheckList& out, int criterion, const std::string& name) const { out.add(criterion, name, pass(), detail()); }

 private:
  int total_ = 0, failed_ = 0;
  std::string first_;
};

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CycVector to_cyc(const RationalVector& v) { return CycVector(v.begin(), v.end()); }

CycVector to_cyc(const IntVector& v) {
  CycVector out;
  for (long long x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

RationalVector unit(int n, int i) {
  RationalVector v(n);
  v[i] = 1;
  return v;
}

IntVector int_unit(int n, int i) {
  IntVector v(n, 0);
  v[i] = 1;
  return v;
}

CycVector multiply_t(const PPermRing& t, const CycVector& x, const CycVector& y) {
  CycVector out(t.rank());
  for (int i = 0; i < t.rank(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < t.rank(); ++j) {
      if (y[j].is_zero()) continue;
      const Cyc w = x[i] * y[j];
      const IntVector& c = t.product(i, j);
      for (int k = 0; k < t.rank(); ++k)
        if (c[k]) out[k] += w * Cyc(static_cast<long>(c[k]));
    }
  }
  return out;
}

Cyc dot(const CycMatrix& m, int row, const CycVector& x) {
  Cyc acc(0L);
  for (int j = 0; j < m.cols(); ++j)
    if (!x[j].is_zero() && !m(row, j).is_zero()) acc += m(row, j) * x[j];
  return acc;
}

bool rows_distinct(const CycMatrix& m) {
  for (int a = 0; a < m.rows(); ++a)
    for (int b = a + 1; b < m.rows(); ++b)
      if (m.row(a) == m.row(b)) return false;
  return true;
}

// Number of right cosets H x fixed by every element of `elems`.
int fixed_cosets(const Group& g, const std::vector<int>& h_sorted, const std::vector<int>& elems) {
  int count = 0;
  for (int x = 0; x < g.order(); ++x) {
    bool fixed = true;
    for (int e : elems)
      if (!std::binary_search(h_sorted.begin(), h_sorted.end(), g.conj(x, e))) {
        fixed = false;
        break;
      }
    count += fixed;
  }
  return count / static_cast<int>(h_sorted.size());
}

// An element of n mapping to `image` under the projection, as an element of g.
int lift_to(const Group& g, const Group& n, const Quotient& q, int image) {
  for (int y = 0; y < n.order(); ++y)
    if (q.projection(y) == image) return g.index_of(n.perm(y));
  throw std::logic_error("element of the quotient without a preimage");
}

// Integer row span of m equals Z^cols.
bool spans_integer_lattice(const IntMatrix& m, int cols) {
  std::vector<std::vector<Integer>> a;
  for (const auto& row : m) {
    std::vector<Integer> r;
    for (long long x : row) r.emplace_back(static_cast<long>(x));
    a.push_back(std::move(r));
  }
  int r = 0;
  for (int c = 0; c < cols; ++c) {
    while (true) {
      int best = -1;
      for (int i = r; i < static_cast<int>(a.size()); ++i)
        if (a[i][c] != 0 && (best < 0 || abs(a[i][c]) < abs(a[best][c]))) best = i;
      if (best < 0) return false;
      std::swap(a[r], a[best]);
      bool clean = true;
      for (int i = r + 1; i < static_cast<int>(a.size()); ++i) {
        if (a[i][c] == 0) continue;
        const Integer q = a[i][c] / a[r][c];
        for (int j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (abs(a[r][c]) != 1) return false;
    ++r;
  }
  return true;
}

}  // namespace

int generated_subgroup(const Lattice& lat, const std::vector<int>& gens) {
  return lat.find_elements(lat.group().closure(gens));
}

CheckList check_structure(Session& s) {
  CheckList out;
  const GroupPtr& gp = s.ambient();
  const Group& g = *gp;
  const Lattice& lat = s.lattice(gp);
  const PPermRing& t = s.pperm(gp);
  const int p = s.p();

  Tally perm_match, fixed;
  for (int c = 0; c < lat.num_classes(); ++c) {
    const int h = lat.class_rep(c);
    Module m = perm_module(gp, s.field(), lat.sub(h).elems);
    bool ok = true;
    try {
      t.coordinates(m);
    } catch (const std::exception&) {
      ok = false;
    }
    perm_match.require(ok, "G/" + lat.label(h));
    for (int q = 0; q < lat.size(); ++q) {
      if (!lat.is_p_group(q, p)) continue;
      fixed.require(s.brauer_quotient_dim(m, q) == fixed_cosets(g, lat.sub(h).elems, lat.sub(q).elems),
                    "G/" + lat.label(h) + " at " + lat.label(q));
    }
  }
  perm_match.report(out, 7, "perm_module_summands_classified");
  fixed.report(out, 7, "brauer_quotient_counts_fixed_cosets");

  // distinct indecomposable summands of F[G/P], counted without the classification
  std::vector<Module> reps;
  for (int pc : lat.p_subgroup_classes(p))
    for (const auto& part : s.summands(perm_module(gp, s.field(), lat.sub(pc).elems))) {
      bool seen = false;
      for (const auto& r : reps)
        if (r.dim() == part.module.dim() && s.isomorphic(r, part.module)) {
          seen = true;
          break;
        }
      if (!seen) reps.push_back(part.module);
    }
  int ex_count = 0;
  for (const auto& r : reps) ex_count += acts_trivially(r, lat.sub(s.vertex(r)).elems);
  out.add(7, "indecomposable_count_matches_classification", static_cast<int>(reps.size()) == t.rank(),
          std::to_string(reps.size()) + " summand classes, rank " + std::to_string(t.rank()));
  out.add(7, "exprojective_count_matches_pairs", ex_count == t.ex_rank(),
          std::to_string(ex_count) + " exprojective classes, " + std::to_string(t.ex_rank()) + " (K,F) pairs");

  Tally criterion, structure;
  for (const auto& b : t.basis()) {
    const int k = lat.normal_closure(b.p_sub);
    const int nrm = lat.normalizer(b.p_sub);
    const int nk = lat.intersect(nrm, k);
    GroupPtr ng = s.normalizer_group(gp, b.p_sub);
    const bool trivial_on_e = acts_trivially(b.inflated, s.map_elements(gp, lat.sub(nk).elems, ng));
    criterion.require(trivial_on_e == b.exprojective, b.label);
    if (!trivial_on_e) continue;
    const long long nsize = lat.sub(nrm).order(), ksize = lat.sub(k).order(), nksize = lat.sub(nk).order();
    bool ok = lat.p_residue(k, p) == k && lat.sub(b.p_sub).order() == p_part(lat.sub(k).order(), p) &&
              nsize * ksize / nksize == g.order() && b.qpair >= 0;
    // N_G(P)/N_K(P) = G/K, and E is the restriction of the (K, F) realization
    ok = ok && t.qpairs()[b.qpair].k == k && s.isomorphic(t.qpairs()[b.qpair].module, b.module) &&
         s.isomorphic(pullback(t.qpairs()[b.qpair].module, s.inclusion(ng, gp)), b.inflated);
    structure.require(ok, b.label);
  }
  criterion.report(out, 7, "exprojective_iff_normal_closure_acts_trivially");
  structure.report(out, 7, "exprojective_pairs_have_expected_structure");

  Tally tensor;
  for (int i = 0; i < t.rank(); ++i)
    for (int j = i; j < t.rank(); ++j)
      if (t.basis()[i].exprojective && t.basis()[j].exprojective)
        tensor.require(t.exprojective_supported(t.product(i, j)), t.basis()[i].label + " x " + t.basis()[j].label);
  tensor.report(out, 7, "exprojective_tensor_closure");

  Tally vertex;
  for (const auto& qp : t.qpairs()) {
    bool ok = is_indecomposable(qp.module, s.config().seed);
    if (ok) {
      const int v = s.vertex(qp.module);
      bool inside = false;
      for (int m : lat.class_members(lat.class_of(v))) inside = inside || lat.contains(m, qp.k);
      ok = inside && lat.sub(v).order() == p_part(lat.sub(qp.k).order(), p);
    }
    vertex.require(ok, qp.label);
  }
  vertex.report(out, 7, "pair_realization_vertex_is_sylow_of_k");
  return out;
}

CheckList check_species_t(Session& s) {
  CheckList out;
  const GroupPtr& gp = s.ambient();
  const Group& g = *gp;
  const Lattice& lat = s.lattice(gp);
  const PPermRing& t = s.pperm(gp);
  const CycMatrix& sm = t.species_matrix();
  const int n = t.rank();

  out.add(5, "t_species_count_equals_rank", sm.rows() == n,
          std::to_string(sm.rows()) + " species, rank " + std::to_string(n));
  const bool invertible = sm.rows() == n && sm.inverse().has_value();
  out.add(5, "t_species_matrix_invertible", invertible);
  out.add(5, "t_species_distinct", rows_distinct(sm));

  Tally mult;
  const CycVector one = to_cyc(t.one());
  for (int k = 0; k < sm.rows(); ++k) {
    mult.require(dot(sm, k, one) == Cyc(1L), t.species()[k].label + " on the trivial module");
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        mult.require(dot(sm, k, to_cyc(t.product(i, j))) == sm(k, i) * sm(k, j),
                     t.species()[k].label + " at " + t.basis()[i].label + " x " + t.basis()[j].label);
  }
  mult.report(out, 5, "t_species_multiplicative");

  if (invertible) {
    const auto& e = t.idempotents();
    Tally orth;
    CycVector sum(n);
    for (int a = 0; a < n; ++a) {
      for (int j = 0; j < n; ++j) sum[j] += e[a][j];
      for (int b = a; b < n; ++b) {
        const CycVector prod = multiply_t(t, e[a], e[b]);
        orth.require(a == b ? prod == e[a] : prod == CycVector(n), std::to_string(a) + "," + std::to_string(b));
      }
    }
    orth.report(out, 5, "t_idempotents_orthogonal");
    out.add(5, "t_idempotents_sum_to_one", sum == one);
  }

  const CycMatrix& ex = t.ex_species_matrix();
  out.add(5, "ex_species_matrix_invertible", ex.rows() == t.ex_rank() && ex.inverse().has_value(),
          std::to_string(ex.rows()) + " x " + std::to_string(ex.cols()));

  Tally bridge, perm;
  for (int k = 0; k < sm.rows(); ++k) {
    const SpeciesIndex& sp = t.species()[k];
    GroupPtr ng = s.normalizer_group(gp, sp.p_sub);
    const Quotient& q = s.quotient(ng, s.locate(s.subgroup(gp, sp.p_sub), ng));
    const int lift = lift_to(g, *ng, q, sp.s);
    const int l = lat.normal_closure(sp.p_sub);
    const Quotient& gl = s.quotient(gp, l);
    const int image = gl.projection(g.index_of(g.perm(lift)));
    int e = -1;
    for (std::size_t j = 0; j < t.ex_species().size(); ++j)
      if (t.ex_species()[j].l == l && gl.group->class_of(t.ex_species()[j].t) == gl.group->class_of(image))
        e = static_cast<int>(j);
    bool ok = e >= 0;
    for (int qi = 0; ok && qi < t.ex_rank(); ++qi) ok = sm(k, t.qpairs()[qi].basis) == ex(e, qi);
    bridge.require(ok, sp.label);

    std::vector<int> gens = lat.sub(sp.p_sub).gens;
    gens.push_back(lift);
    const std::vector<int> ps = g.closure(gens);
    for (int c = 0; c < lat.num_classes(); ++c) {
      const int h = lat.class_rep(c);
      const CycVector x = to_cyc(t.coordinates(perm_module(gp, s.field(), lat.sub(h).elems)));
      perm.require(dot(sm, k, x) == Cyc(static_cast<long>(fixed_cosets(g, lat.sub(h).elems, ps))),
                   sp.label + " on G/" + lat.label(h));
    }
  }
  bridge.report(out, 5, "species_agree_with_exprojective_species_on_exprojectives");
  perm.report(out, 5, "perm_module_species_count_fixed_cosets");
  return out;
}

CheckList check_canonical(Session& s, bool literal) {
  CheckList out;
  const GroupPtr& gp = s.ambient();
  const Lattice& lat = s.lattice(gp);
  const CofixedRing& r = s.cofixed(gp);
  const PPermRing& t = r.top();
  const int n = t.rank();
  const int p = s.p();

  Tally section, denominators;
  for (int i = 0; i < n; ++i) {
    const RationalVector& c = r.can_basis(i);
    section.require(r.lin(c) == unit(n, i), t.basis()[i].label);
    for (int a = 0; a < r.rank(); ++a)
      denominators.require(denominator_is_power_of(c[a], p), t.basis()[i].label + " at " + r.basis()[a].label);
  }
  section.report(out, 2, "lin_can_identity");
  denominators.report(out, 4, "can_denominators_are_powers_of_p");

  // lin applied term by term with freshly induced realizations
  {
    Tally expansion;
    std::vector<IntVector> induced;
    for (const auto& b : r.basis()) {
      GroupPtr ug = r.subgroup_group(b.u);
      const Module& m = s.pperm(ug).qpairs()[b.qpair].module;
      induced.push_back(ug == gp ? t.coordinates(m) : t.coordinates(induce(m, s.inclusion(ug, gp))));
    }
    for (int i = 0; i < n; ++i) {
      RationalVector sum(n);
      const RationalVector& c = r.can_basis(i);
      for (int a = 0; a < r.rank(); ++a)
        if (sgn(c[a]) != 0)
          for (int j = 0; j < n; ++j) sum[j] += c[a] * Rational(static_cast<long>(induced[a][j]));
      expansion.require(sum == unit(n, i), t.basis()[i].label);
    }
    expansion.report(out, 2, "induced_expansion_recovers_module");
  }

  out.add(2, "lin_surjective_over_integers", spans_integer_lattice(r.lin_matrix(), n));

  Tally ring, linmult;
  for (int a = 0; a < r.rank(); ++a)
    for (int b = a; b < r.rank(); ++b) {
      ring.require(r.product(a, b) == r.product(b, a), r.basis()[a].label + " x " + r.basis()[b].label);
      IntVector la(r.lin_matrix()[a].begin(), r.lin_matrix()[a].end());
      IntVector lb(r.lin_matrix()[b].begin(), r.lin_matrix()[b].end());
      linmult.require(r.lin(r.product(a, b)) == to_rational(t.multiply(la, lb)),
                      r.basis()[a].label + " x " + r.basis()[b].label);
    }
  ring.report(out, 2, "cofixed_product_commutative");
  linmult.report(out, 2, "lin_multiplicative");
  {
    const RationalVector& e = r.identity();
    bool ok = r.lin(e) == to_rational(t.one());
    for (int b = 0; ok && b < r.rank(); ++b) ok = r.multiply(e, unit(r.rank(), b)) == unit(r.rank(), b);
    out.add(2, "cofixed_identity_element", ok);
  }

  Tally res;
  for (int c = 0; c < lat.num_classes(); ++c) {
    GroupPtr h = s.subgroup(gp, lat.class_rep(c));
    const CofixedRing& rh = s.cofixed(h);
    const IntMatrix& pm = t.pullback_matrix(s.inclusion(h, gp));
    for (int i = 0; i < n; ++i)
      res.require(r.restrict_to(rh, r.can_basis(i)) == rh.can(to_rational(pm[i])),
                  t.basis()[i].label + " to " + lat.class_label(c));
  }
  res.report(out, 3, "can_commutes_with_restriction");

  Tally iso;
  for (const Hom& a : automorphism_generators(gp)) {
    const IntMatrix& pm = t.pullback_matrix(a);
    for (int i = 0; i < n; ++i) iso.require(r.isogate(a, r.can_basis(i)) == r.can(to_rational(pm[i])), t.basis()[i].label);
  }
  iso.report(out, 3, "can_commutes_with_isogation");

  Tally fixes;
  for (int q = 0; q < t.ex_rank(); ++q)
    fixes.require(r.can_basis(t.qpairs()[q].basis) == r.embed(lat.whole(), unit(t.ex_rank(), q)), t.qpairs()[q].label);
  fixes.report(out, 3, "can_fixes_exprojectives");

  // restriction keeps exprojective modules exprojective, for every subgroup pair
  Tally closure;
  for (int c = 0; c < lat.num_classes(); ++c) {
    GroupPtr ug = s.subgroup(gp, lat.class_rep(c));
    const PPermRing& tu = s.pperm(ug);
    const Lattice& ulat = s.lattice(ug);
    for (int wc = 0; wc < ulat.num_classes(); ++wc) {
      GroupPtr wg = s.subgroup(ug, ulat.class_rep(wc));
      const IntMatrix& pm = tu.pullback_matrix(s.inclusion(wg, ug));
      for (const auto& qp : tu.qpairs())
        closure.require(s.pperm(wg).exprojective_supported(pm[qp.basis]),
                        qp.label + " of " + lat.class_label(c) + " to " + ulat.class_label(wc));
    }
  }
  closure.report(out, 3, "exprojectives_closed_under_restriction");

  // multiplicity identity for U normal in V of prime index other than p, (K, F) fixed by V
  Tally mult;
  for (int c = 0; c < lat.num_classes(); ++c) {
    GroupPtr vg = s.subgroup(gp, lat.class_rep(c));
    const PPermRing& tv = s.pperm(vg);
    const Lattice& vlat = s.lattice(vg);
    for (int u = 0; u < vlat.size(); ++u) {
      const int index = vg->order() / vlat.sub(u).order();
      if (!vlat.is_normal(u) || index == p || !is_prime(index)) continue;
      GroupPtr ug = s.subgroup(vg, u);
      const PPermRing& tu = s.pperm(ug);
      const IntMatrix& res_m = tv.pullback_matrix(s.inclusion(ug, vg));
      for (const auto& qp : tu.qpairs()) {
        bool v_fixed = true;
        for (int gen : vg->generators()) {
          const IntMatrix& cm = tu.pullback_matrix(conjugation_map(vg, gen, ug, ug));
          v_fixed = v_fixed && cm[qp.basis] == int_unit(tu.rank(), qp.basis);
        }
        if (!v_fixed) continue;
        for (int y = 0; y < tv.rank(); ++y) {
          const long long lhs = res_m[y][qp.basis];
          const long long rhs = tv.basis()[y].exprojective ? res_m[y][qp.basis] : 0;
          mult.require(lhs == rhs, qp.label + " of " + vlat.label(u) + " in " + lat.class_label(c) + ", Y = " +
                                       tv.basis()[y].label);
        }
      }
    }
  }
  mult.report(out, 4, "prime_index_multiplicity_identity");

  if (literal) {
    Tally lit;
    for (int i = 0; i < n; ++i) lit.require(r.can_basis(i, true) == r.can_basis(i, false), t.basis()[i].label);
    lit.report(out, 8, "literal_sum_matches_class_sum");
  }
  return out;
}

CheckList check_species_calt(Session& s) {
  CheckList out;
  const GroupPtr& gp = s.ambient();
  const Group& g = *gp;
  const Lattice& lat = s.lattice(gp);
  const CofixedRing& r = s.cofixed(gp);
  const PPermRing& t = r.top();
  const int n = r.rank();
  const CycMatrix& sm = r.species_matrix();

  out.add(5, "cofixed_species_count_equals_rank", sm.rows() == n,
          std::to_string(sm.rows()) + " species, rank " + std::to_string(n));
  const bool invertible = sm.rows() == n && sm.inverse().has_value();
  out.add(5, "cofixed_species_matrix_invertible", invertible);
  out.add(5, "cofixed_species_distinct", rows_distinct(sm));

  Tally mult;
  for (int k = 0; k < sm.rows(); ++k)
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b)
        mult.require(dot(sm, k, to_cyc(r.product(a, b))) == sm(k, a) * sm(k, b),
                     r.k_classes()[k].label + " at " + r.basis()[a].label + " x " + r.basis()[b].label);
  mult.report(out, 5, "cofixed_species_multiplicative");

  Tally top;
  const CycMatrix& ex = t.ex_species_matrix();
  for (int k = 0; k < sm.rows(); ++k) {
    const KClass& kc = r.k_classes()[k];
    if (kc.v != lat.whole()) continue;
    for (int q = 0; q < t.ex_rank(); ++q)
      top.require(sm(k, r.index(lat.whole(), q)) == ex(kc.ex_species, q), kc.label + " at " + t.qpairs()[q].label);
  }
  top.report(out, 5, "top_species_match_exprojective_species");

  if (!invertible) return out;
  const auto& e = r.idempotents();
  Tally orth;
  CycVector sum(n);
  for (int a = 0; a < n; ++a) {
    for (int j = 0; j < n; ++j) sum[j] += e[a][j];
    for (int b = a; b < n; ++b) {
      const CycVector prod = r.multiply(e[a], e[b]);
      orth.require(a == b ? prod == e[a] : prod == CycVector(n), r.k_classes()[a].label + "," + r.k_classes()[b].label);
    }
  }
  orth.report(out, 5, "cofixed_idempotents_orthogonal");
  out.add(5, "cofixed_idempotents_sum_to_identity", sum == to_cyc(r.identity()));

  Tally lift;
  std::vector<CycVector> lins;
  for (const auto& ek : e) lins.push_back(r.lin(ek));
  const auto& et = t.idempotents();
  for (std::size_t k = 0; k < t.species().size(); ++k) {
    const SpeciesIndex& sp = t.species()[k];
    GroupPtr ng = s.normalizer_group(gp, sp.p_sub);
    const Quotient& q = s.quotient(ng, s.locate(s.subgroup(gp, sp.p_sub), ng));
    const int s_lift = lift_to(g, *ng, q, sp.s);
    std::vector<int> gens = lat.sub(sp.p_sub).gens;
    gens.push_back(s_lift);
    const int v = generated_subgroup(lat, gens);
    const int target = r.k_class_of(v, sp.p_sub, s_lift);
    bool ok = lins[target] == et[k];
    for (int other = 0; ok && other < n; ++other) ok = other == target || lins[other] != et[k];
    lift.require(ok, sp.label);
  }
  lift.report(out, 6, "idempotent_lift_unique");
  return out;
}

CheckList verify_all(Session& s, bool literal) {
  CheckList out;
  out.append(check_structure(s));
  out.append(check_species_t(s));
  out.append(check_canonical(s, literal));
  out.append(check_species_calt(s));
  return out;
}

int find_non_simple_non_projective(const PPermRing& t) {
  int found = -1;
  for (int i = 0; i < t.rank(); ++i) {
    const PPermClass& b = t.basis()[i];
    if (b.p_sub == 0 || is_simple(b.module)) continue;
    if (found >= 0) return -1;
    found = i;
  }
  return found;
}

CounterexampleReport counterexample_sl23(const Config& base) {
  Config cfg = base;
  cfg.p = 3;
  Session s(named_group("SL23", cfg.max_order), cfg);
  const GroupPtr& gp = s.ambient();
  const Lattice& lat = s.lattice(gp);
  const CofixedRing& r = s.cofixed(gp);
  const PPermRing& t = r.top();
  CounterexampleReport rep;
  CheckList& out = rep.checks;

  out.add(1, "five_indecomposable_classes", t.rank() == 5, std::to_string(t.rank()) + " classes");
  const int y = find_non_simple_non_projective(t);
  out.add(1, "unique_non_simple_non_projective_module", y >= 0);
  if (y < 0) return rep;
  const PPermClass& yb = t.basis()[y];
  rep.y_label = yb.label;
  rep.y_vertex = lat.label(s.vertex(yb.module));
  out.add(1, "y_vertex_is_c3", rep.y_vertex == "C3" && lat.label(yb.p_sub) == "C3", rep.y_vertex);
  out.add(1, "y_not_exprojective", !yb.exprojective && !acts_trivially(yb.module, lat.sub(yb.p_sub).elems));

  int q8 = -1;
  for (int c = 0; c < lat.num_classes(); ++c)
    if (lat.class_label(c) == "Q8") q8 = lat.class_rep(c);
  out.add(1, "q8_subgroup_present", q8 >= 0);
  if (q8 < 0) return rep;
  GroupPtr qg = s.subgroup(gp, q8);
  const PimTable& pims = s.pims(qg);
  int x = -1, simples2 = 0;
  for (std::size_t i = 0; i < pims.pims.size(); ++i)
    if (pims.pims[i].module.dim() == 2 && is_simple(pims.pims[i].module)) {
      x = static_cast<int>(i);
      ++simples2;
    }
  // every simple module of a 3'-group is projective, so the PIMs list all simples
  out.add(1, "unique_two_dimensional_simple_of_q8", simples2 == 1);
  if (x < 0) return rep;
  rep.x_label = pims.pims[x].label;

  const PPermRing& tq = s.pperm(qg);
  int xq = -1;
  for (int q = 0; q < tq.ex_rank(); ++q)
    if (tq.qpairs()[q].k == 0 && tq.qpairs()[q].pim == x) xq = q;
  const RationalVector& c = r.can_basis(y, cfg.literal_sum);
  rep.can_y = canind_entries(r, c);
  const int xi = r.index(q8, xq);
  rep.coefficient = to_string(c[xi]);
  out.add(1, "three_times_coefficient_is_two", 3 * c[xi] == 2, rep.coefficient);
  bool rest_zero = true;
  for (int a = 0; a < r.rank(); ++a)
    if (a != xi && r.basis()[a].u == q8) rest_zero = rest_zero && sgn(c[a]) == 0;
  out.add(1, "q8_component_is_multiple_of_x", rest_zero);
  out.add(1, "lin_recovers_y", r.lin(c) == unit(t.rank(), y));
  return rep;
}

nlohmann::json canind_entries(const CofixedRing& r, const RationalVector& x) {
  nlohmann::json out = nlohmann::json::array();
  for (int a = 0; a < r.rank(); ++a) {
    if (sgn(x[a]) == 0) continue;
    const RClass& b = r.basis()[a];
    out.push_back({{"U", b.u_label}, {"K", b.k_label}, {"F", b.f_label}, {"coeff", to_string(x[a])}});
  }
  return out;
}

}  // namespace ppcan
