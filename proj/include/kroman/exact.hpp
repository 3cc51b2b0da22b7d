#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kroman/labeling.hpp"

namespace kroman {

// Instance rejected up front because the estimated search space exceeds
// the configured budget. Carries the estimate for diagnostics.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, std::uint64_t estimate)
      : std::runtime_error(what + " (estimated states: " + std::to_string(estimate) + ")"),
        estimate_(estimate) {}

  std::uint64_t estimate() const { return estimate_; }

 private:
  std::uint64_t estimate_;
};

enum class Method { DP, BruteForce };

struct SolveOptions {
  std::uint64_t budget = 100'000'000;
  bool want_witness = false;
  // Brute force only: for k >= 2 an optimal [k]-RDF without label 1
  // exists, so labelings using label 1 may be skipped. Off by default to
  // keep the oracle assumption-free.
  bool prune_label_one = false;
  // Cylinder DP only: quotient states by C_m rotation. Value-only
  // optimization; ignored when a witness is requested.
  bool rotation_symmetry = false;
};

struct SolveResult {
  long long value = 0;
  std::optional<Labeling> witness;
  std::uint64_t states_explored = 0;
  Method method = Method::DP;
};

// Exact gamma_[k]R via a fibre-sweep DP whose state is the current
// fibre's labels plus the residual demand each vertex still places on
// its next-fibre neighbor. Guardrail: ((k+2)(k+1))^m <= budget.
SolveResult solve_cylinder(int m, int n, int k, const SolveOptions& opts = {});

// Torus variant: fixes fibre 0 (and fibre 1) by enumeration, sweeps the
// remaining fibres, and closes the cycle by checking fibre n-1 against
// fibre 0 in both directions.
SolveResult solve_torus(int m, int n, int k, const SolveOptions& opts = {});

// Exhaustive minimum over all labelings; the independent oracle the DP
// is tested against. Guardrail: (k+2)^(mn) <= budget.
SolveResult brute_force(const GridSpec& spec, int k, const SolveOptions& opts = {});

struct SetResult {
  long long value = 0;
  std::vector<Vertex> witness;
  std::uint64_t nodes_explored = 0;
};

// Exact packing number rho(G) with a witness packing.
SetResult max_packing(const GridSpec& spec);

struct EdsResult {
  bool exists = false;
  std::vector<Vertex> witness;
};

// Exact-cover search: is there a set whose closed neighborhoods
// partition V?
EdsResult has_efficient_dominating_set(const GridSpec& spec);

// All efficient dominating sets (each found exactly once).
std::vector<std::vector<Vertex>> enumerate_efficient_dominating_sets(const GridSpec& spec);

// Exact domination number gamma(G) by branch and bound.
SetResult domination_number(const GridSpec& spec);

}  // namespace kroman
