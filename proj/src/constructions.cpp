#include "kroman/constructions.hpp"

#include <string>

namespace kroman {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }  // b > 0, a may be <= 0? callers keep a > 0

std::vector<std::vector<int>> zeros(int m, int n) {
  return std::vector<std::vector<int>>(n, std::vector<int>(m, 0));
}

void require_k(int k) {
  if (k < 1) throw ApplicabilityError("k must be >= 1");
}

void require_n4(int n) {
  if (n < 4) throw ApplicabilityError("requires n >= 4, got " + std::to_string(n));
}

// Converts the pattern's proof obligation into an executable check.
Labeling finish(const char* name, Labeling lab) {
  auto violations = validate(lab);
  if (!violations.empty())
    throw ConstructionError(std::string(name) + " pattern is not a valid [k]-RDF for k=" +
                                std::to_string(lab.k()) + ", n=" +
                                std::to_string(lab.spec().n()) + " (" +
                                std::to_string(violations.size()) + " violations)",
                            std::move(violations));
  return lab;
}

// Uniform interior weight `a` with per-vertex boundary weight
// ceil((k+3-a)/3); shared by the U (m=3) and C (m=4) patterns.
Labeling uniform_interior(const char* name, int m, int n, int k, int a) {
  int b = ceil_div(k + 3 - a, 3);
  auto vals = std::vector<std::vector<int>>(n, std::vector<int>(m, a));
  vals.front().assign(m, b);
  vals.back().assign(m, b);
  return finish(name, Labeling(GridSpec::cylinder(m, n), k, std::move(vals)));
}

// As uniform_interior with base ceil((k+5)/5), then one unit removed at
// every vertex of the maximum packing; shared by P (m=3) and B (m=4).
Labeling packed_reduction(const char* name, int m, int n, int k) {
  int a = ceil_div(k + 5, 5);
  int b = ceil_div(k + 3 - a, 3);
  auto vals = std::vector<std::vector<int>>(n, std::vector<int>(m, a));
  vals.front().assign(m, b);
  vals.back().assign(m, b);
  for (Vertex p : packing_pattern(m, n)) {
    if (vals[p.i][p.j] == 0)
      throw ConstructionError(std::string(name) + " packing reduction would drive (" +
                                  std::to_string(p.i) + "," + std::to_string(p.j) +
                                  ") below zero",
                              {});
    --vals[p.i][p.j];
  }
  return finish(name, Labeling(GridSpec::cylinder(m, n), k, std::move(vals)));
}

// Interior fibre i: 0 at row (i mod m), A elsewhere; boundary fibre: C at
// the row facing the adjacent interior zero, B elsewhere. Shared by the
// S (m=3) and D (m=4) patterns.
Labeling shifted_zero(const char* name, int m, int n, int k) {
  if (!SDParams::admissible(k))
    throw ApplicabilityError(std::string(name) +
                             " requires k <= 13 and k not in {1,8,11,12}, got k=" +
                             std::to_string(k));
  auto p = SDParams::for_k(k);
  auto vals = zeros(m, n);
  for (int i = 1; i < n - 1; ++i)
    for (int j = 0; j < m; ++j) vals[i][j] = (j == i % m) ? 0 : p.A;
  for (auto [bi, adj] : {std::pair{0, 1}, std::pair{n - 1, n - 2}}) {
    int z = adj % m;
    for (int j = 0; j < m; ++j) vals[bi][j] = (j == z) ? p.C : p.B;
  }
  return finish(name, Labeling(GridSpec::cylinder(m, n), k, std::move(vals)));
}

}  // namespace

SDParams SDParams::for_k(int k) {
  SDParams p;
  p.A = ceil_div(k + 4, 4);
  p.B = ceil_div(-2 + 3 * p.A, 2);
  p.C = k + 4 - 3 * p.A;
  return p;
}

bool SDParams::admissible(int k) {
  return k >= 1 && k <= 13 && k != 1 && k != 8 && k != 11 && k != 12;
}

Labeling construct_toroidal_efficient(int m, int n, int k) {
  require_k(k);
  if (m % 5 != 0 || n % 5 != 0 || m < 5 || n < 5)
    throw ApplicabilityError("toroidal efficient pattern requires 5 | m and 5 | n");
  auto vals = zeros(m, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if ((2 * i + j) % 5 == 0) vals[i][j] = k + 1;
  return finish("torus-efficient", Labeling(GridSpec::torus(m, n), k, std::move(vals)));
}

Labeling construct_c4t_p2(int t, int k) {
  require_k(k);
  if (t < 1) throw ApplicabilityError("c4t-p2 requires t >= 1");
  int m = 4 * t;
  auto vals = zeros(m, 2);
  for (int j = 0; j < m; ++j) {
    if (j % 4 == 0) vals[0][j] = k + 1;
    if (j % 4 == 2) vals[1][j] = k + 1;
  }
  return finish("c4t-p2", Labeling(GridSpec::cylinder(m, 2), k, std::move(vals)));
}

Labeling construct_L(int n, int k) {
  require_k(k);
  require_n4(n);
  auto vals = zeros(3, n);
  for (int i = 1; i < n - 1; ++i) vals[i][i % 3] = k;
  vals[0][0] = k + 1;
  vals[n - 1][((n - 2) % 3 + 1) % 3] = k + 1;
  return finish("L", Labeling(GridSpec::cylinder(3, n), k, std::move(vals)));
}

Labeling construct_U(int n, int k) {
  require_k(k);
  require_n4(n);
  return uniform_interior("U", 3, n, k, ceil_div(k + 4, 5));
}

Labeling construct_P(int n, int k) {
  require_k(k);
  require_n4(n);
  return packed_reduction("P", 3, n, k);
}

Labeling construct_S(int n, int k) {
  require_n4(n);
  return shifted_zero("S", 3, n, k);
}

Labeling construct_A(int n, int k) {
  require_k(k);
  if (n < 1) throw ApplicabilityError("A requires n >= 1");
  auto vals = zeros(4, n);
  for (int i = 0; i < n; ++i) vals[i][i % 2 == 0 ? 0 : 2] = k + 1;
  return finish("A", Labeling(GridSpec::cylinder(4, n), k, std::move(vals)));
}

Labeling construct_c4_C(int n, int k) {
  require_k(k);
  require_n4(n);
  return uniform_interior("C", 4, n, k, ceil_div(k + 4, 5));
}

Labeling construct_c4_B(int n, int k) {
  require_k(k);
  require_n4(n);
  return packed_reduction("B", 4, n, k);
}

Labeling construct_c4_D(int n, int k) {
  require_n4(n);
  return shifted_zero("D", 4, n, k);
}

std::vector<Vertex> packing_pattern(int m, int n) {
  if (n < 1) throw ApplicabilityError("packing pattern requires n >= 1");
  std::vector<Vertex> out;
  if (m == 3) {
    // One vertex in every second fibre; the column alternates so that
    // picks two fibres apart do not share the vertex between them.
    for (int t = 0; 2 * t < n; ++t) out.push_back({2 * t, t % 2});
  } else if (m == 4) {
    // Two picks per block of three fibres, rows (0, 2) shifted by 3
    // (mod 4) from block to block, none in the third fibre.
    for (int i = 0; i < n; ++i) {
      int block = i / 3;
      switch (i % 3) {
        case 0: out.push_back({i, (0 + 3 * block) % 4}); break;
        case 1: out.push_back({i, (2 + 3 * block) % 4}); break;
        default: break;
      }
    }
  } else {
    throw ApplicabilityError("packing pattern defined for m in {3,4} only");
  }
  return out;
}

}  // namespace kroman
