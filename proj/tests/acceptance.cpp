// Acceptance gate: one line per criterion, PASS or FAIL with a short
// reason. Exit code = number of failed criteria.

#include <algorithm>
#include <climits>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kroman/bounds.hpp"
#include "kroman/constructions.hpp"
#include "kroman/exact.hpp"

using namespace kroman;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

long long min_upper(int m, int n, int k) {
  long long best = LLONG_MAX;
  for (const auto& bv : upper_bounds(m, n, k))
    if (bv.applicable) best = std::min(best, bv.value);
  return best;
}

BoundValue bound(int m, int n, int k, BoundName name) {
  for (const auto& bv : upper_bounds(m, n, k))
    if (bv.name == name) return bv;
  throw std::logic_error("missing bound");
}

Outcome construction_sweep() {
  Outcome out;
  std::vector<std::string> failures;
  struct Ctor {
    const char* name;
    int m;
    BoundName bname;
    int k_max;
    std::function<Labeling(int, int)> make;
    std::function<bool(int)> admissible;
  };
  auto always = [](int) { return true; };
  auto sd = [](int k) { return SDParams::admissible(k); };
  const Ctor ctors[] = {
      {"L", 3, BoundName::L, 30, construct_L, always},
      {"U", 3, BoundName::U, 30, construct_U, always},
      {"P", 3, BoundName::P, 30, construct_P, always},
      {"S", 3, BoundName::S, 13, construct_S, sd},
      {"A", 4, BoundName::A, 30, construct_A, always},
      {"C", 4, BoundName::C, 30, construct_c4_C, always},
      {"B", 4, BoundName::B, 30, construct_c4_B, always},
      {"D", 4, BoundName::D, 13, construct_c4_D, sd},
  };
  for (const auto& ctor : ctors) {
    for (int n = 4; n <= 30; ++n) {
      for (int k = 1; k <= ctor.k_max; ++k) {
        if (!ctor.admissible(k)) continue;
        std::string cell = std::string(ctor.name) + "(n=" + std::to_string(n) +
                           ",k=" + std::to_string(k) + ")";
        try {
          Labeling lab = ctor.make(n, k);
          if (!validate(lab).empty()) {
            failures.push_back(cell + " invalid");
          } else if (lab.weight() != bound(ctor.m, n, k, ctor.bname).value) {
            failures.push_back(cell + " weight mismatch");
          }
        } catch (const std::exception&) {
          failures.push_back(cell + " refused");
        }
      }
    }
  }
  if (!failures.empty()) {
    // summarize by (family, k): the n-dimension is never the culprit
    std::set<std::string> summary;
    for (const auto& f : failures) {
      auto fam = f.substr(0, f.find('('));
      auto kpos = f.find("k=");
      summary.insert(fam + "@k=" + f.substr(kpos + 2, f.find(')') - kpos - 2));
    }
    std::ostringstream msg;
    msg << failures.size() << " failing cells: ";
    for (const auto& s : summary) msg << s << " ";
    out.pass = false;
    out.detail = msg.str();
  }
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  for (int m : {3, 4})
    for (int n : {1, 2, 3})
      for (int k : {1, 2})
        if (solve_cylinder(m, n, k).value != brute_force(GridSpec::cylinder(m, n), k).value) {
          out.pass = false;
          out.detail += "(" + std::to_string(m) + "," + std::to_string(n) + "," +
                        std::to_string(k) + ") ";
        }
  if (solve_cylinder(3, 4, 1).value != brute_force(GridSpec::cylinder(3, 4), 1).value) {
    out.pass = false;
    out.detail += "(3,4,1)";
  }
  return out;
}

Outcome efficient_family() {
  Outcome out;
  for (int k = 1; k <= 4; ++k) {
    if (solve_cylinder(3, 1, k).value != k + 1) out.pass = false;
    if (solve_cylinder(4, 2, k).value != 2 * (k + 1)) out.pass = false;
  }
  if (solve_torus(5, 5, 1).value != 10) out.pass = false;
  if (!out.pass) out.detail = "efficient-family value mismatch";
  return out;
}

Outcome eds_theorem() {
  Outcome out;
  for (int m = 3; m <= 8; ++m) {
    for (int n = 1; n <= 5; ++n) {
      bool expected = (n == 1 && m % 3 == 0) || (n == 2 && m % 4 == 0);
      if (has_efficient_dominating_set(GridSpec::cylinder(m, n)).exists != expected) {
        out.pass = false;
        out.detail += "(" + std::to_string(m) + "," + std::to_string(n) + ") ";
      }
    }
  }
  return out;
}

Outcome packing_lemmas() {
  Outcome out;
  for (int m : {3, 4}) {
    for (int n = 1; n <= 9; ++n) {
      long long expected = m == 3 ? (n + 1) / 2 : (2 * n + 2) / 3;
      if (max_packing(GridSpec::cylinder(m, n)).value != expected) out.pass = false;
    }
    for (int n = 1; n <= 30; ++n) {
      GridSpec spec = GridSpec::cylinder(m, n);
      auto pattern = packing_pattern(m, n);
      long long expected = m == 3 ? (n + 1) / 2 : (2 * n + 2) / 3;
      if (static_cast<long long>(pattern.size()) != expected) out.pass = false;
      std::set<Vertex> covered;
      for (Vertex v : pattern)
        for (Vertex u : spec.closed_neighborhood(v))
          if (!covered.insert(u).second) out.pass = false;
    }
  }
  if (!out.pass) out.detail = "packing size or disjointness mismatch";
  return out;
}

Outcome sandwich() {
  Outcome out;
  for (int m : {3, 4}) {
    for (int n = 4; n <= 6; ++n) {
      for (int k = 1; k <= 3; ++k) {
        long long exact = solve_cylinder(m, n, k).value;
        long long lower = (1LL * (k + 1) * m * n + 4) / 5;  // ceil
        if (!(lower <= exact && exact <= min_upper(m, n, k))) {
          out.pass = false;
          out.detail += "(" + std::to_string(m) + "," + std::to_string(n) + "," +
                        std::to_string(k) + "): " + std::to_string(lower) + " <= " +
                        std::to_string(exact) + " <= " + std::to_string(min_upper(m, n, k)) +
                        " violated; ";
        }
      }
    }
  }
  return out;
}

Outcome figure_reproduction() {
  Outcome out;
  for (int n = 4; n <= 40; ++n) {
    auto best = dominance_pattern(4, 15, n);
    std::vector<BoundName> expected;
    if (n <= 10) expected = {BoundName::A};
    else if (n <= 12) expected = {BoundName::A, BoundName::B};
    else expected = {BoundName::B};
    if (best != expected) {
      out.pass = false;
      out.detail += "m=4,k=15,n=" + std::to_string(n) + " ";
    }
  }
  for (int k = 14; k <= 40; ++k) {
    auto best = dominance_pattern(3, k, 200);
    bool u = k % 5 == 1;
    if (best.size() != 1 || best.front() != (u ? BoundName::U : BoundName::P)) {
      out.pass = false;
      out.detail += "m=3,k=" + std::to_string(k) + " ";
    }
  }
  return out;
}

Outcome relaxation_soundness() {
  Outcome out;
  long long counterexamples = 0;
  for (int k = 1; k <= 100; ++k) {
    for (int n = 4; n <= 100; ++n) {
      for (int m : {3, 4}) {
        for (const auto& bv : upper_bounds(m, n, k)) {
          if (!bv.applicable || !bv.relaxed) continue;
          Rational exact(bv.value, 1);
          bool ok = bv.name == BoundName::C ? exact < *bv.relaxed : exact <= *bv.relaxed;
          if (!ok) ++counterexamples;
        }
      }
    }
  }
  if (counterexamples) {
    out.pass = false;
    out.detail = std::to_string(counterexamples) + " counterexamples";
  }
  return out;
}

Outcome torus_monotonicity() {
  Outcome out;
  for (const auto& [m, n] : {std::pair{3, 3}, {3, 4}, {4, 3}, {4, 4}}) {
    if (solve_torus(m, n, 1).value > solve_cylinder(m, n, 1).value) {
      out.pass = false;
      out.detail += "(" + std::to_string(m) + "," + std::to_string(n) + ",1) ";
    }
  }
  return out;
}

Outcome improvement_over_prior() {
  Outcome out;
  for (int n = 4; n <= 100; ++n) {
    if (construct_L(n, 2).weight() > 2 * n + 3) {
      out.pass = false;
      out.detail += "n=" + std::to_string(n) + " ";
    }
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*check)();
  };
  const Criterion criteria[] = {
      {"1 construction validity sweep", construction_sweep},
      {"2 oracle equivalence", oracle_equivalence},
      {"3 efficient-family exactness", efficient_family},
      {"4 EDS theorem reproduction", eds_theorem},
      {"5 packing lemmas", packing_lemmas},
      {"6 sandwich property", sandwich},
      {"7 figure reproduction", figure_reproduction},
      {"8 relaxation soundness", relaxation_soundness},
      {"9 torus <= cylinder monotonicity", torus_monotonicity},
      {"10 improvement over prior bound", improvement_over_prior},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    try {
      out = c.check();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %s: %s%s%s\n", c.name, out.pass ? "PASS" : "FAIL",
                out.detail.empty() ? "" : " — ", out.detail.c_str());
    if (!out.pass) ++failed;
  }
  return failed;
}
