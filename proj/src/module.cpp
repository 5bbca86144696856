#include "ppcan/module.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ppcan/eigen.hpp"

namespace ppcan {

Module::Module(GroupPtr g, FieldPtr f, int dim, std::vector<FqMatrix> generator_matrices, std::string label)
    : data_(std::make_shared<Data>()) {
  if (generator_matrices.size() != g->generators().size())
    throw std::invalid_argument("module needs one matrix per group generator");
  for (const auto& m : generator_matrices)
    if (m.rows() != dim || m.cols() != dim) throw std::invalid_argument("generator matrix has the wrong size");
  data_->group = std::move(g);
  data_->field = std::move(f);
  data_->dim = dim;
  data_->gens = std::move(generator_matrices);
  data_->label = std::move(label);
}

Module Module::relabeled(std::string label) const {
  Module m(data_->group, data_->field, data_->dim, data_->gens, std::move(label));
  return m;
}

const FqMatrix& Module::action(int e) const {
  std::lock_guard<std::mutex> lock(data_->mu);
  auto& memo = data_->memo;
  if (auto it = memo.find(e); it != memo.end()) return it->second;
  if (memo.empty()) memo.emplace(0, FqMatrix::identity(data_->field, data_->dim));
  const Group& g = *data_->group;
  std::vector<int> chain;
  int x = e;
  while (!memo.count(x)) {
    chain.push_back(x);
    x = g.word_parent(x);
  }
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const int y = *it;
    memo.emplace(y, memo.at(g.word_parent(y)) * data_->gens[g.word_gen(y)]);
  }
  return memo.at(e);
}

bool Module::validate() const {
  const Group& g = group();
  for (int a = 0; a < g.order(); ++a)
    for (std::size_t k = 0; k < g.generators().size(); ++k)
      if (!(action(a) * data_->gens[k] == action(g.mul(a, g.generators()[k])))) return false;
  return true;
}

Module trivial_module(const GroupPtr& g, const FieldPtr& f) {
  std::vector<FqMatrix> gens(g->generators().size(), FqMatrix::identity(f, 1));
  return Module(g, f, 1, std::move(gens), "F");
}

namespace {

// Right cosets of a subgroup: coset index of every element, and the least element of each coset.
struct Cosets {
  std::vector<int> of;
  std::vector<int> reps;
};

Cosets right_cosets(const Group& g, const std::vector<int>& sub) {
  Cosets c;
  c.of.assign(g.order(), -1);
  for (int x = 0; x < g.order(); ++x) {
    if (c.of[x] >= 0) continue;
    const int idx = static_cast<int>(c.reps.size());
    c.reps.push_back(x);
    for (int h : sub) c.of[g.mul(h, x)] = idx;
  }
  return c;
}

}  // namespace

Module perm_module(const GroupPtr& g, const FieldPtr& f, const std::vector<int>& subgroup) {
  Cosets c = right_cosets(*g, subgroup);
  const int n = static_cast<int>(c.reps.size());
  std::vector<FqMatrix> gens;
  for (int gen : g->generators()) {
    FqMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m(i, c.of[g->mul(c.reps[i], gen)]) = 1;
    gens.push_back(std::move(m));
  }
  return Module(g, f, n, std::move(gens), "F[G/H]");
}

Module regular_module(const GroupPtr& g, const FieldPtr& f) {
  return perm_module(g, f, {0}).relabeled("FG");
}

Module pullback(const Module& m, const Hom& hom, std::string label) {
  if (hom.dst != m.group_ptr() && hom.dst->perms() != m.group().perms()) throw std::invalid_argument("pullback: hom target is not the module's group");
  std::vector<FqMatrix> gens;
  for (int gen : hom.src->generators()) gens.push_back(m.action(hom(gen)));
  return Module(hom.src, m.field_ptr(), m.dim(), std::move(gens), label.empty() ? m.label() : std::move(label));
}

Module induce(const Module& m, const Hom& inclusion, std::string label) {
  if (inclusion.src != m.group_ptr() && inclusion.src->perms() != m.group().perms()) throw std::invalid_argument("induce: hom source is not the module's group");
  if (!inclusion.is_injective()) throw std::invalid_argument("induce: hom is not injective");
  const Group& g = *inclusion.dst;
  std::vector<int> image = inclusion.image;
  std::vector<int> preimage(g.order(), -1);
  for (int h = 0; h < inclusion.src->order(); ++h) preimage[image[h]] = h;
  std::sort(image.begin(), image.end());
  Cosets c = right_cosets(g, image);
  const int n = static_cast<int>(c.reps.size());
  const int d = m.dim();
  std::vector<FqMatrix> gens;
  for (int gen : g.generators()) {
    FqMatrix big(m.field_ptr(), n * d, n * d);
    for (int i = 0; i < n; ++i) {
      const int tg = g.mul(c.reps[i], gen);
      const int j = c.of[tg];
      const int h = preimage[g.mul(tg, g.inv(c.reps[j]))];
      const FqMatrix& blk = m.action(h);
      for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s) big(i * d + r, j * d + s) = blk(r, s);
    }
    gens.push_back(std::move(big));
  }
  return Module(inclusion.dst, m.field_ptr(), n * d, std::move(gens), label.empty() ? "Ind(" + m.label() + ")" : std::move(label));
}

Module tensor(const Module& a, const Module& b) {
  if (a.group_ptr() != b.group_ptr() && a.group().perms() != b.group().perms())
    throw std::invalid_argument("tensor: modules over different groups");
  std::vector<FqMatrix> gens;
  for (std::size_t k = 0; k < a.generator_matrices().size(); ++k)
    gens.push_back(kronecker(a.generator_matrices()[k], b.generator_matrices()[k]));
  return Module(a.group_ptr(), a.field_ptr(), a.dim() * b.dim(), std::move(gens), a.label() + "(x)" + b.label());
}

Module direct_sum(const Module& a, const Module& b) {
  std::vector<FqMatrix> gens;
  for (std::size_t k = 0; k < a.generator_matrices().size(); ++k)
    gens.push_back(block_diagonal(a.generator_matrices()[k], b.generator_matrices()[k]));
  return Module(a.group_ptr(), a.field_ptr(), a.dim() + b.dim(), std::move(gens), a.label() + "+" + b.label());
}

Module submodule(const Module& m, const FqMatrix& basis) {
  std::vector<FqMatrix> gens;
  for (const auto& g : m.generator_matrices()) {
    auto sol = solve_left(basis, basis * g);
    if (!sol) throw std::invalid_argument("submodule: subspace is not invariant");
    gens.push_back(std::move(sol->particular));
  }
  return Module(m.group_ptr(), m.field_ptr(), basis.rows(), std::move(gens), m.label());
}

Module quotient_module(const Module& m, const FqMatrix& sub, const FqMatrix& complement) {
  FqMatrix full = sub.rows() ? sub.vstack(complement) : complement;
  const int s = sub.rows(), c = complement.rows();
  std::vector<FqMatrix> gens;
  for (const auto& g : m.generator_matrices()) {
    auto sol = solve_left(full, complement * g);
    if (!sol) throw std::invalid_argument("quotient_module: rows do not span the space");
    gens.push_back(sol->particular.submatrix(0, s, c, c));
  }
  return Module(m.group_ptr(), m.field_ptr(), c, std::move(gens), m.label());
}

FqMatrix fixed_points(const Module& m, const std::vector<int>& elems) {
  std::vector<int> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  const auto gens = m.group().generators_of(sorted);
  const int d = m.dim();
  if (gens.empty()) return FqMatrix::identity(m.field_ptr(), d);
  FqMatrix stacked(m.field_ptr(), d, 0);
  for (int g : gens) stacked = stacked.hstack(m.action(g) - FqMatrix::identity(m.field_ptr(), d));
  FqMatrix k = left_kernel(stacked);
  if (k.rows() == 0) return k;
  return rref(k).reduced;
}

std::vector<int> kernel_of_action(const Module& m) {
  std::vector<int> out;
  for (int e = 0; e < m.group().order(); ++e)
    if (m.action(e).is_identity()) out.push_back(e);
  return out;
}

bool acts_trivially(const Module& m, const std::vector<int>& elems) {
  for (int e : elems)
    if (!m.action(e).is_identity()) return false;
  return true;
}

Cyc brauer_character(const Module& m, int elem) {
  const int d = m.group().elem_order(elem);
  if (m.dim() == 0) return Cyc(0L);
  return lifted_trace(m.action(elem), d);
}

bool is_invariant(const Module& m, const FqMatrix& basis) {
  if (basis.rows() == 0) return true;
  Subspace s(basis);
  for (const auto& g : m.generator_matrices()) {
    FqMatrix img = basis * g;
    for (int r = 0; r < img.rows(); ++r)
      if (!s.contains(img.row(r))) return false;
  }
  return true;
}

namespace {

Fe parse_entry(const nlohmann::json& x, const Field& f) {
  if (x.is_number_integer()) {
    const long long v = x.get<long long>();
    if (v < 0 || v >= f.order()) throw std::invalid_argument("matrix entry is not a field element encoding");
    return static_cast<Fe>(v);
  }
  if (!x.is_array() || static_cast<int>(x.size()) > f.degree())
    throw std::invalid_argument("matrix entry must be an integer or a coefficient array");
  long long enc = 0, scale = 1;
  for (const auto& c : x) {
    long long v = c.get<long long>() % f.characteristic();
    if (v < 0) v += f.characteristic();
    enc += v * scale;
    scale *= f.characteristic();
  }
  return static_cast<Fe>(enc);
}

}  // namespace

Module module_from_json(const nlohmann::json& doc, const GroupPtr& g, const FieldPtr& f) {
  const int dim = doc.at("dim").get<int>();
  const auto& mats = doc.at("matrices");
  if (mats.size() != g->generators().size())
    throw std::invalid_argument("module document needs one matrix per group generator");
  std::vector<FqMatrix> gens;
  for (const auto& jm : mats) {
    if (static_cast<int>(jm.size()) != dim) throw std::invalid_argument("matrix has the wrong number of rows");
    FqMatrix m(f, dim, dim);
    for (int r = 0; r < dim; ++r) {
      if (static_cast<int>(jm[r].size()) != dim) throw std::invalid_argument("matrix row has the wrong length");
      for (int c = 0; c < dim; ++c) m(r, c) = parse_entry(jm[r][c], *f);
    }
    gens.push_back(std::move(m));
  }
  Module out(g, f, dim, std::move(gens), doc.value("label", std::string{"M"}));
  if (!out.validate()) throw std::invalid_argument("matrices do not define a representation of the group");
  return out;
}

nlohmann::json module_to_json(const Module& m) {
  nlohmann::json mats = nlohmann::json::array();
  for (const auto& g : m.generator_matrices()) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < g.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < g.cols(); ++c) row.push_back(g(r, c));
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  return {{"dim", m.dim()},
          {"label", m.label()},
          {"field", {{"p", m.field().characteristic()}, {"m", m.field().root_order()}}},
          {"matrices", mats}};
}

}  // namespace ppcan
