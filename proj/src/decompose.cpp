#include "ppcan/decompose.hpp"

#include <deque>
#include <random>
#include <stdexcept>

namespace ppcan {

bool has_trivial_action(const Module& m) {
  for (const auto& g : m.generator_matrices())
    if (!g.is_identity()) return false;
  return true;
}

namespace {

FqMatrix unit_row(const FieldPtr& f, int n, int i) {
  FqMatrix v(f, 1, n);
  v(0, i) = 1;
  return v;
}

// Hom from a module with trivial action: any map into the fixed points of N.
std::vector<FqMatrix> hom_from_trivial(const Module& m, const Module& n) {
  std::vector<int> all(n.group().order());
  for (int i = 0; i < n.group().order(); ++i) all[i] = i;
  FqMatrix fix = fixed_points(n, all);
  std::vector<FqMatrix> out;
  for (int i = 0; i < m.dim(); ++i)
    for (int r = 0; r < fix.rows(); ++r) {
      FqMatrix phi(m.field_ptr(), m.dim(), n.dim());
      for (int j = 0; j < n.dim(); ++j) phi(i, j) = fix(r, j);
      out.push_back(std::move(phi));
    }
  return out;
}

}  // namespace

std::vector<FqMatrix> hom_space(const Module& m, const Module& n) {
  const int d = m.dim(), e = n.dim();
  if (d == 0 || e == 0) return {};
  if (has_trivial_action(m)) return hom_from_trivial(m, n);
  const FieldPtr& f = m.field_ptr();
  const auto& ma = m.generator_matrices();
  const auto& nb = n.generator_matrices();

  // Spin M from unit vectors; psi[i] gives the image of spun vector i as a
  // function of the remaining free parameters (rows = parameters).
  EchelonBuilder eb(f, d, true);
  std::vector<FqMatrix> spun;
  std::vector<FqMatrix> psi;
  int z = 0;

  auto constrain = [&](const FqMatrix& rel) {
    if (rel.is_zero()) return;
    FqMatrix k = left_kernel(rel);
    for (auto& p : psi) p = k * p;
    z = k.rows();
  };

  for (int s = 0; s < d; ++s) {
    FqMatrix seed = unit_row(f, d, s);
    if (!eb.add(seed.row(0))) continue;
    for (auto& p : psi) p = p.vstack(FqMatrix(f, e, e));
    FqMatrix fresh(f, z + e, e);
    for (int j = 0; j < e; ++j) fresh(z + j, j) = 1;
    z += e;
    spun.push_back(seed);
    psi.push_back(std::move(fresh));
    for (std::size_t i = spun.size() - 1; i < spun.size(); ++i) {
      for (std::size_t k = 0; k < ma.size(); ++k) {
        FqMatrix w = spun[i] * ma[k];
        if (eb.add(w.row(0))) {
          spun.push_back(w);
          psi.push_back(psi[i] * nb[k]);
          continue;
        }
        auto c = eb.express(w.row(0));
        FqMatrix rel = psi[i] * nb[k];
        rel = FqMatrix(f, z, e) - rel;
        for (std::size_t j = 0; j < c->size(); ++j)
          if ((*c)[j]) rel = rel + psi[j].scaled((*c)[j]);
        constrain(rel);
        if (z == 0) return {};
      }
    }
  }

  FqMatrix basis(f, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) basis(i, j) = spun[i](0, j);
  FqMatrix binv = *inverse(basis);
  std::vector<FqMatrix> out;
  out.reserve(z);
  for (int r = 0; r < z; ++r) {
    FqMatrix images(f, d, e);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < e; ++j) images(i, j) = psi[i](r, j);
    out.push_back(binv * images);
  }
  return out;
}

int Decomposition::total_dim() const {
  int t = 0;
  for (const auto& p : parts) t += p.module.dim() * p.multiplicity;
  return t;
}

namespace {

struct Fitting {
  FqMatrix kernel_part, image_part;
};

// Fitting decomposition of an endomorphism: ker(a^k) + im(a^k) for k large.
std::optional<Fitting> fitting_split(const FqMatrix& a) {
  const int d = a.rows();
  FqMatrix p = a;
  int r = rank(p);
  while (r > 0) {
    FqMatrix p2 = p * a;
    const int r2 = rank(p2);
    if (r2 == r) break;
    p = std::move(p2);
    r = r2;
  }
  if (r == 0 || r == d) return std::nullopt;
  return Fitting{rref(left_kernel(p)).reduced, rref(p).reduced};
}

// Coefficients of the monic polynomial of least degree killing v under phi, low degree first.
std::vector<Fe> krylov_polynomial(const FqMatrix& phi, const FqMatrix& v) {
  const Field& f = phi.field();
  EchelonBuilder eb(phi.field_ptr(), phi.cols(), true);
  FqMatrix w = v;
  int k = 0;
  while (eb.add(w.row(0))) {
    w = w * phi;
    ++k;
  }
  auto c = eb.express(w.row(0));
  std::vector<Fe> poly(k + 1, 0);
  for (int i = 0; i < k; ++i) poly[i] = f.neg((*c)[i]);
  poly[k] = 1;
  return poly;
}

Fe eval_poly(const Field& f, const std::vector<Fe>& poly, Fe x) {
  Fe acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, x), poly[i]);
  return acc;
}

FqMatrix eval_poly(const std::vector<Fe>& poly, const FqMatrix& phi) {
  const int d = phi.rows();
  FqMatrix acc(phi.field_ptr(), d, d);
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * phi + FqMatrix::scalar(phi.field_ptr(), d, poly[i]);
  return acc;
}

struct Probe {
  std::optional<Fitting> split;
  std::optional<Fe> scalar;  // set when phi - scalar is nilpotent
};

Probe probe(const FqMatrix& phi) {
  const Field& f = phi.field();
  const int d = phi.rows();
  auto poly = krylov_polynomial(phi, unit_row(phi.field_ptr(), d, 0));
  for (int x = 0; x < f.order(); ++x) {
    if (eval_poly(f, poly, static_cast<Fe>(x)) != 0) continue;
    FqMatrix a = phi - FqMatrix::scalar(phi.field_ptr(), d, static_cast<Fe>(x));
    auto s = fitting_split(a);
    if (s) return {s, std::nullopt};
    return {std::nullopt, static_cast<Fe>(x)};
  }
  return {fitting_split(eval_poly(poly, phi)), std::nullopt};
}

bool generates_nilpotent_algebra(const std::vector<FqMatrix>& ns, const FieldPtr& f, int d) {
  FqMatrix w = FqMatrix::identity(f, d);
  while (w.rows() > 0) {
    FqMatrix next(f, 0, d);
    for (const auto& n : ns) next = next.vstack(w * n);
    FqMatrix reduced = next.rows() ? rref(next).reduced : next;
    if (reduced.rows() >= w.rows()) return false;
    w = std::move(reduced);
  }
  return true;
}

FqMatrix random_combination(const std::vector<FqMatrix>& basis, std::mt19937_64& rng) {
  const Field& f = basis[0].field();
  std::uniform_int_distribution<int> dist(0, f.order() - 1);
  FqMatrix acc(basis[0].field_ptr(), basis[0].rows(), basis[0].cols());
  for (const auto& b : basis) {
    const Fe c = static_cast<Fe>(dist(rng));
    if (c) acc = acc + b.scaled(c);
  }
  return acc;
}

// A Fitting split of m, or nullopt once m is certified indecomposable.
std::optional<Fitting> find_split(const Module& m, std::mt19937_64& rng) {
  auto end = hom_space(m, m);
  if (end.size() <= 1) return std::nullopt;
  std::vector<FqMatrix> nil;
  bool all_scalar_plus_nil = true;
  for (const auto& phi : end) {
    Probe pr = probe(phi);
    if (pr.split) return pr.split;
    if (!pr.scalar) {
      all_scalar_plus_nil = false;
      continue;
    }
    nil.push_back(phi - FqMatrix::scalar(m.field_ptr(), m.dim(), *pr.scalar));
  }
  if (all_scalar_plus_nil && generates_nilpotent_algebra(nil, m.field_ptr(), m.dim())) return std::nullopt;
  const int budget = 64 + 8 * static_cast<int>(end.size());
  for (int t = 0; t < budget; ++t) {
    Probe pr = probe(random_combination(end, rng));
    if (pr.split) return pr.split;
  }
  throw std::runtime_error("decompose: no splitting endomorphism found within the retry budget");
}

}  // namespace

std::vector<Summand> indecomposable_summands(const Module& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Summand> out;
  std::deque<Summand> work;
  work.push_back({m, FqMatrix::identity(m.field_ptr(), m.dim())});
  while (!work.empty()) {
    Summand s = std::move(work.front());
    work.pop_front();
    if (s.module.dim() == 0) continue;
    if (s.module.dim() == 1) {
      out.push_back(std::move(s));
      continue;
    }
    if (has_trivial_action(s.module)) {
      for (int i = 0; i < s.module.dim(); ++i) {
        FqMatrix line = unit_row(m.field_ptr(), s.module.dim(), i);
        out.push_back({submodule(s.module, line), line * s.basis});
      }
      continue;
    }
    auto split = find_split(s.module, rng);
    if (!split) {
      out.push_back(std::move(s));
      continue;
    }
    work.push_back({submodule(s.module, split->kernel_part), split->kernel_part * s.basis});
    work.push_back({submodule(s.module, split->image_part), split->image_part * s.basis});
  }
  return out;
}

bool is_indecomposable(const Module& m, std::uint64_t seed) {
  if (m.dim() <= 1) return m.dim() == 1;
  if (has_trivial_action(m)) return false;
  std::mt19937_64 rng(seed);
  return !find_split(m, rng).has_value();
}

std::optional<FqMatrix> find_isomorphism(const Module& a, const Module& b, std::uint64_t seed) {
  if (a.dim() != b.dim()) return std::nullopt;
  if (a.dim() == 0) return FqMatrix(a.field_ptr(), 0, 0);
  auto hom = hom_space(a, b);
  if (hom.empty()) return std::nullopt;
  for (const auto& h : hom)
    if (rank(h) == a.dim()) return h;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 32; ++t) {
    FqMatrix h = random_combination(hom, rng);
    if (rank(h) == a.dim()) return h;
  }
  return std::nullopt;
}

Decomposition decompose(const Module& m, std::uint64_t seed) {
  Decomposition dec;
  dec.summands = indecomposable_summands(m, seed);
  for (const auto& s : dec.summands) {
    int found = -1;
    for (std::size_t p = 0; p < dec.parts.size(); ++p)
      if (find_isomorphism(dec.parts[p].module, s.module, seed)) {
        found = static_cast<int>(p);
        break;
      }
    if (found < 0) {
      found = static_cast<int>(dec.parts.size());
      dec.parts.push_back({s.module, 0});
    }
    ++dec.parts[found].multiplicity;
    dec.part_of.push_back(found);
  }
  return dec;
}

namespace {

int spin_dim(const FqMatrix& v, const std::vector<FqMatrix>& mats) {
  EchelonBuilder eb(v.field_ptr(), v.cols());
  std::vector<FqMatrix> queue{v};
  eb.add(v.row(0));
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& a : mats) {
      FqMatrix w = queue[i] * a;
      if (eb.add(w.row(0))) queue.push_back(std::move(w));
    }
  return static_cast<int>(queue.size());
}

// Every nonzero vector of the row space of `basis`, up to scalars, spins to the whole space.
bool all_spin_full(const FqMatrix& basis, const std::vector<FqMatrix>& mats) {
  const Field& f = basis.field();
  const int k = basis.rows(), d = basis.cols();
  std::vector<int> coeff(k, 0);
  for (int lead = 0; lead < k; ++lead) {
    std::fill(coeff.begin(), coeff.end(), 0);
    coeff[lead] = 1;
    while (true) {
      FqMatrix v(basis.field_ptr(), 1, d);
      for (int i = 0; i < k; ++i)
        if (coeff[i])
          for (int j = 0; j < d; ++j) v(0, j) = f.add(v(0, j), f.mul(static_cast<Fe>(coeff[i]), basis(i, j)));
      if (spin_dim(v, mats) < d) return false;
      int pos = lead + 1;
      while (pos < k && ++coeff[pos] == f.order()) coeff[pos++] = 0;
      if (pos >= k) break;
    }
  }
  return true;
}

}  // namespace

bool is_simple(const Module& m) {
  const int d = m.dim();
  if (d <= 1) return d == 1;
  const Field& f = m.field();
  std::optional<FqMatrix> theta;
  int best = d + 1;
  for (int e = 0; e < m.group().order() && best > 1; ++e)
    for (int l = 1; l < f.order() && best > 1; ++l) {
      FqMatrix t = m.action(e) - FqMatrix::scalar(m.field_ptr(), d, static_cast<Fe>(l));
      const int nullity = d - rank(t);
      if (nullity > 0 && nullity < best) {
        best = nullity;
        theta = std::move(t);
      }
    }
  double count = 1;
  for (int i = 0; i < best; ++i) count *= f.order();
  if (count > 1e6) throw std::runtime_error("is_simple: kernel too large to enumerate");
  std::vector<FqMatrix> mats = m.generator_matrices(), trans;
  for (const auto& a : mats) trans.push_back(a.transpose());
  return all_spin_full(left_kernel(*theta), mats) && all_spin_full(left_kernel(theta->transpose()), trans);
}

bool is_isomorphic(const Module& a, const Module& b, std::uint64_t seed) {
  if (a.dim() != b.dim()) return false;
  if (find_isomorphism(a, b, seed)) return true;
  Decomposition da = decompose(a, seed), db = decompose(b, seed);
  if (da.parts.size() != db.parts.size()) return false;
  std::vector<char> used(db.parts.size(), 0);
  for (const auto& pa : da.parts) {
    bool matched = false;
    for (std::size_t j = 0; j < db.parts.size(); ++j) {
      if (used[j] || db.parts[j].multiplicity != pa.multiplicity) continue;
      if (find_isomorphism(pa.module, db.parts[j].module, seed)) {
        used[j] = 1;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace ppcan
