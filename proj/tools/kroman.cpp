#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kroman/bounds.hpp"
#include "kroman/constructions.hpp"
#include "kroman/exact.hpp"
#include "kroman/json_io.hpp"

namespace {

using namespace kroman;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;    // invalid labeling, inapplicable bound, infeasible pattern
constexpr int kExitUsage = 2;     // bad invocation, malformed input, capacity guardrail

std::uint64_t default_budget() {
  if (const char* env = std::getenv("ROMAN_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "ignoring unparsable ROMAN_BUDGET=" << env << "\n";
  }
  return SolveOptions{}.budget;
}

void emit(const json& doc, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << doc.dump() << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << doc.dump() << "\n";
}

json read_json(const std::string& path) {
  json doc;
  try {
    if (path == "-") {
      std::cin >> doc;
    } else {
      std::ifstream in(path);
      if (!in) throw InputError("cannot open labeling file: " + path);
      in >> doc;
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("not valid JSON: ") + e.what());
  }
  return doc;
}

// "a" or "a:b" (inclusive).
std::pair<int, int> parse_range(const std::string& text) {
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected N or LO:HI, got " + text);
  }
}

std::optional<BoundValue> bound_for(BoundName name, int m, int n, int k) {
  for (const auto& bv : upper_bounds(m, n, k))
    if (bv.name == name) return bv;
  return std::nullopt;
}

int run_construct(const std::string& family, int m, int n, int k, int t,
                  const std::string& out_path) {
  if (family == "packing") {
    auto pattern = packing_pattern(m, n);
    emit(to_json(pattern), out_path);
    long long expected = m == 3 ? (n + 1) / 2 : (2 * n + 2) / 3;
    std::cerr << "packing of size " << pattern.size() << " (formula " << expected << ")\n";
    return kExitOk;
  }

  Labeling lab = [&]() {
    if (family == "L") return construct_L(n, k);
    if (family == "U") return construct_U(n, k);
    if (family == "P") return construct_P(n, k);
    if (family == "S") return construct_S(n, k);
    if (family == "A") return construct_A(n, k);
    if (family == "C") return construct_c4_C(n, k);
    if (family == "B") return construct_c4_B(n, k);
    if (family == "D") return construct_c4_D(n, k);
    if (family == "torus-efficient") return construct_toroidal_efficient(m, n, k);
    if (family == "c4t-p2") return construct_c4t_p2(t, k);
    throw CLI::ValidationError("unknown family: " + family);
  }();
  emit(to_json(lab), out_path);

  std::cerr << "weight " << lab.weight();
  if (family == "torus-efficient") {
    std::cerr << " (formula (k+1)mn/5 = " << 1LL * (k + 1) * m * n / 5 << ")";
  } else if (family == "c4t-p2") {
    std::cerr << " (formula 2(k+1)t = " << 2LL * (k + 1) * t << ")";
  } else {
    static const std::map<std::string, std::pair<int, BoundName>> kBoundOf = {
        {"L", {3, BoundName::L}}, {"U", {3, BoundName::U}}, {"P", {3, BoundName::P}},
        {"S", {3, BoundName::S}}, {"A", {4, BoundName::A}}, {"C", {4, BoundName::C}},
        {"B", {4, BoundName::B}}, {"D", {4, BoundName::D}}};
    auto [bm, bname] = kBoundOf.at(family);
    if (auto bv = bound_for(bname, bm, n, k); bv && bv->applicable)
      std::cerr << " (bound " << to_string(bname) << " = " << bv->value << ")";
  }
  std::cerr << "\n";
  return kExitOk;
}

int run_verify(const std::string& path, std::optional<int> k_flag) {
  Labeling lab = labeling_from_json(read_json(path));
  if (k_flag && *k_flag != lab.k())
    throw InputError("--k " + std::to_string(*k_flag) + " does not match document k=" +
                     std::to_string(lab.k()));
  auto violations = validate(lab);
  if (violations.empty()) {
    std::cout << json{{"valid", true}, {"weight", lab.weight()}}.dump() << "\n";
    return kExitOk;
  }
  std::cout << json{{"valid", false}, {"violations", to_json(violations)}}.dump() << "\n";
  std::cerr << violations.size() << " violated vertices\n";
  return kExitDomain;
}

int run_exact(int m, int n, int k, bool torus, const std::string& witness_path,
              std::uint64_t budget) {
  SolveOptions opts;
  opts.budget = budget;
  opts.want_witness = !witness_path.empty();
  SolveResult res = torus ? solve_torus(m, n, k, opts) : solve_cylinder(m, n, k, opts);
  std::cout << json{{"gamma_kR", res.value},
                    {"method", res.method == Method::DP ? "dp" : "brute-force"},
                    {"states", res.states_explored}}
                   .dump()
            << "\n";
  if (res.witness) emit(to_json(*res.witness), witness_path);
  return kExitOk;
}

int run_compare(int m, const std::string& k_range, const std::string& n_range,
                const std::string& csv_path) {
  if (m != 3 && m != 4) throw CLI::ValidationError("compare supports --m 3 or --m 4");
  auto [k_lo, k_hi] = parse_range(k_range);
  auto [n_lo, n_hi] = parse_range(n_range);
  auto rows = compare(m, k_lo, k_hi, n_lo, n_hi);
  if (csv_path.empty() || csv_path == "-") {
    write_comparison_csv(std::cout, m, rows);
  } else {
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("cannot open output file: " + csv_path);
    write_comparison_csv(out, m, rows);
  }
  // dominance summary: for each k, where the argmin set changes over n
  for (int k = k_lo; k <= k_hi; ++k) {
    std::ostringstream line;
    std::vector<BoundName> prev;
    int run_start = n_lo;
    auto flush = [&](int run_end) {
      if (prev.empty()) return;
      line << " [" << run_start << "," << run_end << "]:";
      for (std::size_t i = 0; i < prev.size(); ++i) line << (i ? "+" : "") << to_string(prev[i]);
    };
    for (const auto& row : rows) {
      if (row.k != k) continue;
      if (row.best != prev) {
        flush(row.n - 1);
        prev = row.best;
        run_start = row.n;
      }
    }
    flush(n_hi);
    std::cerr << "k=" << k << line.str() << "\n";
  }
  return kExitOk;
}

int run_eds(int m, int n, bool torus) {
  GridSpec spec = torus ? GridSpec::torus(m, n) : GridSpec::cylinder(m, n);
  EdsResult res = has_efficient_dominating_set(spec);
  json doc{{"exists", res.exists}};
  if (res.exists) doc["witness"] = to_json(res.witness);
  std::cout << doc.dump() << "\n";
  return kExitOk;
}

int run_packing(int m, int n, bool torus) {
  GridSpec spec = torus ? GridSpec::torus(m, n) : GridSpec::cylinder(m, n);
  SetResult res = max_packing(spec);
  std::cout << json{{"rho", res.value}, {"witness", to_json(res.witness)}}.dump() << "\n";
  return kExitOk;
}

int run_gamma(int m, int n, bool torus) {
  GridSpec spec = torus ? GridSpec::torus(m, n) : GridSpec::cylinder(m, n);
  SetResult res = domination_number(spec);
  std::cout << json{{"gamma", res.value}, {"witness", to_json(res.witness)}}.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"[k]-Roman domination on cylindrical and toroidal grids"};
  app.require_subcommand(1);

  std::string family, labeling_path = "-", witness_path, csv_path, json_path;
  std::string k_range = "1", n_range = "4";
  int m = 3, n = 4, k = 1, t = 1;
  std::optional<int> k_check;
  bool torus = false;
  std::uint64_t budget = default_budget();

  auto* c = app.add_subcommand("construct", "emit a named labeling pattern as JSON");
  c->add_option("--family", family, "L|U|P|S|A|C|B|D|torus-efficient|c4t-p2|packing")
      ->required();
  c->add_option("--m", m, "cycle length (torus-efficient, packing)");
  c->add_option("--n", n, "path length");
  c->add_option("--k", k, "domination order k");
  c->add_option("--t", t, "half-period for c4t-p2 (m = 4t)");
  c->add_option("--json", json_path, "output file (default: stdout)");

  auto* v = app.add_subcommand("verify", "check a labeling document");
  v->add_option("path", labeling_path, "labeling JSON file, - for stdin");
  v->add_option("--k", k_check, "require the document's k to equal this");

  auto* e = app.add_subcommand("exact", "exact gamma_[k]R by dynamic programming");
  e->add_option("--m", m)->required();
  e->add_option("--n", n)->required();
  e->add_option("--k", k)->required();
  e->add_flag("--torus", torus, "solve C_m x C_n instead of C_m x P_n");
  e->add_option("--witness", witness_path, "write an optimal labeling here");
  e->add_option("--budget", budget, "state-space guardrail");

  auto* cmp = app.add_subcommand("compare", "evaluate all bound formulas over a grid");
  cmp->add_option("--m", m)->required();
  cmp->add_option("--k", k_range, "k or k_lo:k_hi");
  cmp->add_option("--n", n_range, "n or n_lo:n_hi");
  cmp->add_option("--csv", csv_path, "output file (default: stdout)");

  auto* eds = app.add_subcommand("eds", "efficient dominating set existence");
  eds->add_option("--m", m)->required();
  eds->add_option("--n", n)->required();
  eds->add_flag("--torus", torus);

  auto* pk = app.add_subcommand("packing", "maximum packing number");
  pk->add_option("--m", m)->required();
  pk->add_option("--n", n)->required();
  pk->add_flag("--torus", torus);

  auto* g = app.add_subcommand("gamma", "domination number");
  g->add_option("--m", m)->required();
  g->add_option("--n", n)->required();
  g->add_flag("--torus", torus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& pe) {
    app.exit(pe, std::cout, std::cerr);
    return kExitUsage;
  }

  try {
    if (c->parsed()) return run_construct(family, m, n, k, t, json_path);
    if (v->parsed()) return run_verify(labeling_path, k_check);
    if (e->parsed()) return run_exact(m, n, k, torus, witness_path, budget);
    if (cmp->parsed()) return run_compare(m, k_range, n_range, csv_path);
    if (eds->parsed()) return run_eds(m, n, torus);
    if (pk->parsed()) return run_packing(m, n, torus);
    if (g->parsed()) return run_gamma(m, n, torus);
  } catch (const CapacityError& err) {
    std::cerr << "capacity: " << err.what() << "\n";
    return kExitUsage;
  } catch (const InputError& err) {
    std::cerr << "input: " << err.what() << "\n";
    return kExitUsage;
  } catch (const ApplicabilityError& err) {
    std::cerr << "not applicable: " << err.what() << "\n";
    return kExitDomain;
  } catch (const ConstructionError& err) {
    std::cerr << "construction failed: " << err.what() << "\n";
    return kExitDomain;
  } catch (const CLI::ValidationError& err) {
    std::cerr << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
