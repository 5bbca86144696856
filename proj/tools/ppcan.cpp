#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ppcan/named_groups.hpp"
#include "ppcan/verify.hpp"

using namespace ppcan;
using nlohmann::json;

namespace {

struct Options {
  std::string group = "C2";
  std::string group_file;
  int p = 2;
  int max_order = 512;
  int max_dim = 600;
  std::uint64_t seed = 1;
  std::string format = "json";
  bool literal_sum = false;
  bool timing = false;
  std::string module = "G/1";
  std::string corpus;
};

void add_common(CLI::App* app, Options& o) {
  app->add_option("--group", o.group, "built-in group name");
  app->add_option("--group-file", o.group_file, "JSON group file (overrides --group)");
  app->add_option("--p", o.p, "prime")->check(CLI::PositiveNumber);
  app->add_option("--max-order", o.max_order, "largest group order accepted")->check(CLI::PositiveNumber);
  app->add_option("--max-dim", o.max_dim, "largest module dimension accepted")->check(CLI::PositiveNumber);
  app->add_option("--seed", o.seed, "seed of the randomized decomposition fallback");
  app->add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app->add_flag("--literal-sum", o.literal_sum, "evaluate can by the literal sum over all subgroup pairs");
  app->add_flag("--timing", o.timing, "add wall-clock time to the report");
}

Config config_of(const Options& o) { return Config{o.p, o.max_order, o.max_dim, o.seed, o.literal_sum}; }

GroupPtr load_group(const Options& o) {
  if (o.group_file.empty()) return named_group(o.group, o.max_order);
  std::ifstream in(o.group_file);
  if (!in) throw std::runtime_error("cannot open " + o.group_file);
  return group_from_json(json::parse(in), o.max_order);
}

std::string group_name(const Options& o, const Group& g) { return o.group_file.empty() ? o.group : g.name(); }

json field_json(const Field& f) {
  return {{"p", f.characteristic()}, {"q", f.order()}, {"m", f.root_order()}, {"modulus", f.modulus()},
          {"root_generator", f.to_string(f.root_generator())}};
}

json report_head(const std::string& command, const Options& o, const Session& s) {
  return {{"command", command},
          {"config",
           {{"group", group_name(o, *s.ambient())},
            {"order", s.ambient()->order()},
            {"p", o.p},
            {"seed", o.seed},
            {"max_order", o.max_order},
            {"max_dim", o.max_dim},
            {"literal_sum", o.literal_sum}}},
          {"field", field_json(*s.field())}};
}

json cyc_row(const std::vector<Cyc>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(c.str());
  return out;
}

json cyc_matrix(const CycMatrix& m) {
  json out = json::array();
  for (int r = 0; r < m.rows(); ++r) out.push_back(cyc_row(m.row(r)));
  return out;
}

std::vector<std::string> t_labels(const PPermRing& t) {
  std::vector<std::string> out;
  for (const auto& b : t.basis()) out.push_back(b.label);
  return out;
}

std::vector<std::string> r_labels(const CofixedRing& r) {
  std::vector<std::string> out;
  for (const auto& b : r.basis()) out.push_back(b.label);
  return out;
}

std::vector<std::string> species_labels(const PPermRing& t) {
  std::vector<std::string> out;
  for (const auto& sp : t.species()) out.push_back(sp.label);
  return out;
}

std::vector<std::string> k_labels(const CofixedRing& r) {
  std::vector<std::string> out;
  for (const auto& k : r.k_classes()) out.push_back(k.label);
  return out;
}

json classify(Session& s) {
  const PPermRing& t = s.pperm(s.ambient());
  const CofixedRing& r = s.cofixed(s.ambient());
  const Lattice& lat = s.lattice(s.ambient());
  json pairs = json::array(), qpairs = json::array(), rtab = json::array();
  for (const auto& b : t.basis()) {
    GroupPtr n = s.normalizer_group(s.ambient(), b.p_sub);
    const auto& pims = s.pims(s.quotient(n, s.locate(s.subgroup(s.ambient(), b.p_sub), n)).group);
    json j{{"label", b.label}, {"P", lat.label(b.p_sub)}, {"E", pims.pims[b.pim].label},
           {"dim", b.module.dim()}, {"exprojective", b.exprojective}};
    if (b.qpair >= 0) j["pair"] = t.qpairs()[b.qpair].label;
    pairs.push_back(std::move(j));
  }
  for (const auto& q : t.qpairs())
    qpairs.push_back({{"label", q.label}, {"K", lat.label(q.k)}, {"dim", q.module.dim()}, {"basis", t.basis()[q.basis].label}});
  for (const auto& b : r.basis()) rtab.push_back({{"label", b.label}, {"U", b.u_label}, {"K", b.k_label}, {"F", b.f_label}});
  json counts{{"pperm_pairs", t.rank()},
              {"qpairs", t.ex_rank()},
              {"r_triples", r.rank()},
              {"i_pairs", static_cast<int>(t.species().size())},
              {"k_triples", static_cast<int>(r.k_classes().size())}};
  return {{"counts", counts},
          {"pperm_table", pairs},
          {"qpair_table", qpairs},
          {"r_table", rtab},
          {"i_table", species_labels(t)},
          {"k_table", k_labels(r)}};
}

Module parse_module(Session& s, const std::string& source) {
  const GroupPtr& g = s.ambient();
  const Lattice& lat = s.lattice(g);
  if (source.rfind("G/", 0) == 0) {
    const std::string label = source.substr(2);
    for (int c = 0; c < lat.num_classes(); ++c)
      if (lat.class_label(c) == label) return perm_module(g, s.field(), lat.sub(lat.class_rep(c)).elems);
    throw std::runtime_error("no subgroup class labelled " + label);
  }
  if (source == "Y") {
    const PPermRing& t = s.pperm(g);
    const int y = find_non_simple_non_projective(t);
    if (y < 0) throw std::runtime_error("no unique non-simple non-projective indecomposable for this group and prime");
    return t.basis()[y].module;
  }
  std::ifstream in(source);
  if (!in) throw std::runtime_error("module argument is neither G/<label>, Y, nor a readable file: " + source);
  return module_from_json(json::parse(in), g, s.field());
}

json canind(Session& s, const Options& o) {
  const CofixedRing& r = s.cofixed(s.ambient());
  const PPermRing& t = r.top();
  const IntVector x = t.coordinates(parse_module(s, o.module));
  const RationalVector c = r.can(to_rational(x), o.literal_sum);
  json input = json::array(), rhs = json::array();
  for (int i = 0; i < t.rank(); ++i)
    if (x[i]) input.push_back({{"basis", t.basis()[i].label}, {"mult", x[i]}});
  const RationalVector back = r.lin(c);
  for (int i = 0; i < t.rank(); ++i)
    if (sgn(back[i]) != 0) rhs.push_back({{"basis", t.basis()[i].label}, {"coeff", to_string(back[i])}});
  CheckList checks;
  checks.add(2, "lin_can_identity", back == to_rational(x));
  bool dens = true;
  for (const auto& v : c) dens = dens && denominator_is_power_of(v, s.p());
  checks.add(4, "can_denominators_are_powers_of_p", dens);
  return {{"module", o.module}, {"coordinates", input}, {"can", canind_entries(r, c)}, {"lin_of_can", rhs},
          {"checks", checks.to_json()}, {"pass", checks.all_pass()}};
}

json species(Session& s) {
  const CofixedRing& r = s.cofixed(s.ambient());
  const PPermRing& t = r.top();
  std::vector<std::string> ex_rows, ex_cols;
  for (const auto& e : t.ex_species()) ex_rows.push_back(e.label);
  for (const auto& q : t.qpairs()) ex_cols.push_back(q.label);
  return {{"t", {{"rows", species_labels(t)}, {"columns", t_labels(t)}, {"matrix", cyc_matrix(t.species_matrix())}}},
          {"t_ex", {{"rows", ex_rows}, {"columns", ex_cols}, {"matrix", cyc_matrix(t.ex_species_matrix())}}},
          {"cofixed", {{"rows", k_labels(r)}, {"columns", r_labels(r)}, {"matrix", cyc_matrix(r.species_matrix())}}}};
}

json idempotents(Session& s) {
  const CofixedRing& r = s.cofixed(s.ambient());
  const PPermRing& t = r.top();
  json te = json::array(), re = json::array();
  const auto sl = species_labels(t);
  const auto kl = k_labels(r);
  for (std::size_t k = 0; k < sl.size(); ++k) te.push_back({{"species", sl[k]}, {"vector", cyc_row(t.idempotents()[k])}});
  for (std::size_t k = 0; k < kl.size(); ++k) re.push_back({{"species", kl[k]}, {"vector", cyc_row(r.idempotents()[k])}});
  return {{"t", {{"columns", t_labels(t)}, {"idempotents", te}}}, {"cofixed", {{"columns", r_labels(r)}, {"idempotents", re}}}};
}

json counterexample_json(const CounterexampleReport& rep) {
  return {{"Y", rep.y_label}, {"Y_vertex", rep.y_vertex}, {"X", rep.x_label}, {"coefficient", rep.coefficient},
          {"can_Y", rep.can_y}, {"checks", rep.checks.to_json()}, {"pass", rep.checks.all_pass()}};
}

json verify_one(Session& s, const Options& o, bool& ok) {
  CheckList checks = verify_all(s, o.literal_sum);
  if (s.ambient()->name() == "SL23" && s.p() == 3) checks.append(counterexample_sl23(config_of(o)).checks);
  ok = ok && checks.all_pass();
  return {{"group", group_name(o, *s.ambient())}, {"p", s.p()}, {"checks", checks.to_json()}, {"pass", checks.all_pass()}};
}

// Flattens a report into tab-separated lines: one per leaf, path then value.
void tsv_lines(const json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) tsv_lines(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) tsv_lines(j[i], path + "." + std::to_string(i), out);
  } else if (j.is_array()) {
    out << path;
    for (const auto& v : j) out << '\t' << (v.is_string() ? v.get<std::string>() : v.dump());
    out << '\n';
  } else {
    out << path << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit(const json& report, const Options& o) {
  if (o.format == "tsv")
    tsv_lines(report, "", std::cout);
  else
    std::cout << report.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-permutation modules: classification, species and canonical induction"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::pair<std::string, CLI::App*>> subs;
  for (const char* name : {"classify", "canind", "species", "idempotents", "verify", "counterexample-sl23"}) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub, o);
    subs.emplace_back(name, sub);
  }
  app.get_subcommand("canind")->add_option("--module", o.module, "G/<subgroup label>, Y, or a module JSON file");
  app.get_subcommand("verify")->add_option("--corpus", o.corpus, "named corpus (small)")->check(CLI::IsMember({"small"}));
  CLI11_PARSE(app, argc, argv);

  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) command = name;

  const auto start = std::chrono::steady_clock::now();
  try {
    json report;
    bool ok = true;
    if (command == "counterexample-sl23") {
      Options fixed = o;
      fixed.group = "SL23";
      fixed.group_file.clear();
      fixed.p = 3;
      Session s(named_group("SL23", o.max_order), config_of(fixed));
      report = report_head(command, fixed, s);
      const CounterexampleReport rep = counterexample_sl23(config_of(fixed));
      report["results"] = counterexample_json(rep);
      ok = rep.checks.all_pass();
    } else if (command == "verify" && !o.corpus.empty()) {
      report = {{"command", command}, {"config", {{"corpus", o.corpus}, {"p", o.p}, {"seed", o.seed}}}};
      json runs = json::array();
      for (const char* name : {"C2", "C4", "C2xC2", "D8", "Q8", "S3", "A4"}) {
        Options each = o;
        each.group = name;
        Session s(named_group(name, o.max_order), config_of(each));
        runs.push_back(verify_one(s, each, ok));
      }
      report["results"] = runs;
    } else {
      Session s(load_group(o), config_of(o));
      report = report_head(command, o, s);
      if (command == "classify") {
        report["results"] = classify(s);
      } else if (command == "canind") {
        report["results"] = canind(s, o);
        ok = report["results"]["pass"].get<bool>();
      } else if (command == "species") {
        report["results"] = species(s);
      } else if (command == "idempotents") {
        report["results"] = idempotents(s);
      } else {
        report["results"] = verify_one(s, o, ok);
      }
    }
    report["pass"] = ok;
    if (o.timing)
      report["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(report, o);
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
