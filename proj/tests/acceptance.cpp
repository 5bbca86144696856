// Runs every acceptance criterion over the corpus and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ppcan/named_groups.hpp"
#include "ppcan/verify.hpp"

using namespace ppcan;

namespace {

std::vector<std::pair<std::string, int>> corpus() {
  std::vector<std::pair<std::string, int>> out;
  for (const char* name : {"C2", "C3", "C4", "C2xC2", "C6", "S3", "D8", "Q8", "A4", "SL23"}) {
    const int order = named_group(name)->order();
    for (int p : {2, 3})
      if (order % p == 0) out.emplace_back(name, p);
  }
  // groups of order prime to p
  out.emplace_back("C3", 2);
  out.emplace_back("Q8", 3);
  return out;
}

bool literal_instance(const std::string& name, int p) { return (name == "C2xC2" && p == 2) || (name == "SL23" && p == 3); }

}  // namespace

int main() {
  const std::map<int, std::string> titles{
      {1, "SL(2,3), p = 3: coefficient of [Q8, X] in can(Y) is exactly 2/3"},
      {2, "lin(can(x)) = x on every basis element, corpus"},
      {3, "can commutes with restriction and isogation and fixes exprojectives, corpus"},
      {4, "can denominators are powers of p; prime-index multiplicity identity, corpus"},
      {5, "species of both rings: square, invertible, distinct; idempotents orthogonal, summing to one"},
      {6, "each idempotent e_{P,s} has the unique lift e_{<P,s>,P,s}"},
      {7, "classification, exprojectivity criterion, tensor closure, fixed-point counts"},
      {8, "literal double sum equals the class-representative sum (C2xC2 p=2, SL23 p=3)"},
  };
  std::map<int, bool> pass;
  std::map<int, int> count;
  for (const auto& [c, _] : titles) pass[c] = true;

  auto record = [&](const CheckList& list, const std::string& where) {
    for (const auto& c : list.checks()) {
      ++count[c.criterion];
      if (c.pass) continue;
      pass[c.criterion] = false;
      std::cerr << "failed " << c.name << " on " << where << ": " << c.detail << "\n";
    }
  };

  const auto start = std::chrono::steady_clock::now();
  try {
    CounterexampleReport rep = counterexample_sl23(Config{3});
    record(rep.checks, "SL23 p=3");
    std::cerr << "coefficient of [Q8," << rep.x_label << "] in can(" << rep.y_label << ") = " << rep.coefficient << "\n";
  } catch (const std::exception& e) {
    pass[1] = false;
    std::cerr << "counterexample raised: " << e.what() << "\n";
  }
  for (const auto& [name, p] : corpus()) {
    const std::string where = name + " p=" + std::to_string(p);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      Session s(named_group(name), Config{p});
      record(verify_all(s, literal_instance(name, p)), where);
    } catch (const std::exception& e) {
      for (int c = 2; c <= 8; ++c) pass[c] = false;
      std::cerr << where << " raised: " << e.what() << "\n";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << where << " done in " << secs << " s\n";
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool all = true;
  for (const auto& [c, title] : titles) {
    const bool ok = pass[c] && count[c] > 0;
    all = all && ok;
    std::printf("%s criterion %d: %s (%d checks)\n", ok ? "PASS" : "FAIL", c, title.c_str(), count[c]);
  }
  std::fprintf(stderr, "total %.1f s\n", total);
  return all ? 0 : 1;
}
