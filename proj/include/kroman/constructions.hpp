#pragma once

#include <vector>

#include "kroman/labeling.hpp"

namespace kroman {

// A generated labeling that fails its own validity check. Constructors
// never return silently-invalid labelings; the violation list is attached
// so the deficit pattern can be inspected.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(std::string what, std::vector<Violation> violations)
      : std::runtime_error(std::move(what)), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Parameters A, B, C shared by the two refined patterns (C_3 and C_4).
// Feasible only when C >= 0, which excludes k = 1.
struct SDParams {
  int A = 0;
  int B = 0;
  int C = 0;

  static SDParams for_k(int k);
  bool feasible() const { return C >= 0; }

  // k <= 13 with k not in {1, 8, 11, 12}: the range where the interior
  // pattern satisfies 3A >= k + 2 and C >= 0.
  static bool admissible(int k);
};

// Efficient-dominating-set labeling on C_m [] C_n with 5 | m, 5 | n:
// k+1 at (i,j) iff 2i + j == 0 (mod 5). Weight (k+1)mn/5.
Labeling construct_toroidal_efficient(int m, int n, int k);

// Efficient-dominating-set labeling on C_{4t} [] P_2. Weight 2(k+1)t.
Labeling construct_c4t_p2(int t, int k);

// C_3 [] P_n patterns. Weights equal the corresponding bound formulas.
Labeling construct_L(int n, int k);
Labeling construct_U(int n, int k);
Labeling construct_P(int n, int k);
Labeling construct_S(int n, int k);

// C_4 [] P_n patterns.
Labeling construct_A(int n, int k);
Labeling construct_c4_C(int n, int k);
Labeling construct_c4_B(int n, int k);
Labeling construct_c4_D(int n, int k);

// Maximum packing attaining ceil(n/2) (m = 3) resp. ceil(2n/3) (m = 4).
std::vector<Vertex> packing_pattern(int m, int n);

}  // namespace kroman
