#include "ppcan/named_groups.hpp"

#include <array>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ppcan {

Perm parse_cycles(int degree, const std::string& cycles) {
  Perm p = perm_identity(degree);
  std::size_t i = 0;
  while (i < cycles.size()) {
    if (cycles[i] != '(') {
      ++i;
      continue;
    }
    const std::size_t close = cycles.find(')', i);
    if (close == std::string::npos) throw std::invalid_argument("unbalanced cycle: " + cycles);
    std::istringstream in(cycles.substr(i + 1, close - i - 1));
    std::vector<int> pts;
    int x;
    while (in >> x) {
      if (x < 1 || x > degree) throw std::invalid_argument("cycle point out of range: " + cycles);
      pts.push_back(x - 1);
    }
    for (std::size_t k = 0; k < pts.size(); ++k) p[pts[k]] = static_cast<std::uint16_t>(pts[(k + 1) % pts.size()]);
    i = close + 1;
  }
  if (!perm_is_valid(p)) throw std::invalid_argument("cycles do not form a permutation: " + cycles);
  return p;
}

namespace {

// SL(2,3) acting on the right of the eight nonzero row vectors of F_3^2.
std::vector<Perm> sl23_generators() {
  std::vector<std::array<int, 2>> vecs;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a || b) vecs.push_back({a, b});
  auto index = [&](std::array<int, 2> v) {
    for (std::size_t i = 0; i < vecs.size(); ++i)
      if (vecs[i] == v) return static_cast<int>(i);
    throw std::logic_error("vector not found");
  };
  const int mats[2][2][2] = {{{1, 1}, {0, 1}}, {{0, 2}, {1, 0}}};
  std::vector<Perm> gens;
  for (const auto& m : mats) {
    Perm p(vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      const auto& v = vecs[i];
      p[i] = static_cast<std::uint16_t>(
          index({(v[0] * m[0][0] + v[1] * m[1][0]) % 3, (v[0] * m[0][1] + v[1] * m[1][1]) % 3}));
    }
    gens.push_back(std::move(p));
  }
  return gens;
}

struct Named {
  int degree;
  std::vector<std::string> gens;
};

const std::map<std::string, Named>& table() {
  static const std::map<std::string, Named> t = {
      {"trivial", {1, {}}},
      {"C2", {2, {"(1 2)"}}},
      {"C3", {3, {"(1 2 3)"}}},
      {"C4", {4, {"(1 2 3 4)"}}},
      {"C2xC2", {4, {"(1 2)", "(3 4)"}}},
      {"C6", {5, {"(1 2)(3 4 5)"}}},
      {"S3", {3, {"(1 2 3)", "(1 2)"}}},
      {"D8", {4, {"(1 2 3 4)", "(1 3)"}}},
      {"Q8", {8, {"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"}}},
      {"A4", {4, {"(1 2 3)", "(1 2)(3 4)"}}},
      {"S4", {4, {"(1 2 3 4)", "(1 2)"}}},
      {"C3xC3", {6, {"(1 2 3)", "(4 5 6)"}}},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& named_group_names() {
  static const std::vector<std::string> names = {"trivial", "C2", "C3", "C4", "C2xC2", "C6",    "S3",
                                                 "D8",      "Q8", "A4", "SL23", "S4",    "C3xC3"};
  return names;
}

GroupPtr named_group(const std::string& name, int max_order) {
  if (name == "SL23") return Group::generate(8, sl23_generators(), max_order, "SL23");
  auto it = table().find(name);
  if (it == table().end()) throw std::invalid_argument("unknown group name: " + name);
  std::vector<Perm> gens;
  for (const auto& c : it->second.gens) gens.push_back(parse_cycles(it->second.degree, c));
  return Group::generate(it->second.degree, gens, max_order, name);
}

GroupPtr group_from_json(const nlohmann::json& doc, int max_order) {
  if (!doc.contains("degree") || !doc.contains("generators"))
    throw std::invalid_argument("group document needs \"degree\" and \"generators\"");
  const int degree = doc.at("degree").get<int>();
  if (degree < 1 || degree > 65535) throw std::invalid_argument("bad degree");
  std::vector<Perm> gens;
  for (const auto& g : doc.at("generators")) {
    Perm p;
    for (const auto& x : g) {
      const int v = x.get<int>();
      if (v < 1 || v > degree) throw std::invalid_argument("generator entry out of range");
      p.push_back(static_cast<std::uint16_t>(v - 1));
    }
    gens.push_back(std::move(p));
  }
  std::string name = doc.value("name", std::string{});
  return Group::generate(degree, gens, max_order, name);
}

nlohmann::json group_to_json(const Group& g) {
  nlohmann::json gens = nlohmann::json::array();
  for (int e : g.generators()) {
    nlohmann::json img = nlohmann::json::array();
    for (auto x : g.perm(e)) img.push_back(x + 1);
    gens.push_back(img);
  }
  return {{"degree", g.degree()}, {"generators", gens}, {"name", g.name()}, {"order", g.order()}};
}

}  // namespace ppcan
