#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kroman/grid.hpp"

namespace kroman {

enum class BoundName { L, U, P, S, A, C, B, D, LowerRegular, LowerCylinder };

std::string to_string(BoundName name);

// Exact rational, kept reduced; used for the papers' linear relaxations.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  long long ceil() const;
  std::string str() const;  // "p/q", or "p" when q == 1

  friend auto operator<=>(const Rational& a, const Rational& b) {
    return a.num * b.den <=> b.num * a.den;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
};

struct BoundValue {
  BoundName name;
  bool applicable = false;
  long long value = 0;                // exact ceiling form
  std::optional<Rational> relaxed;    // linear relaxation, where the source states one
};

// All upper-bound formulas for C_m [] P_n, m in {3, 4}. Inapplicable
// entries (wrong n range, k outside the S/D window) are flagged, not
// omitted, so callers see the full catalog.
std::vector<BoundValue> upper_bounds(int m, int n, int k);

// Best applicable lower bound for gamma_[k]R(spec), reported as the
// ceiling of the rational expression (the invariant is an integer).
BoundValue lower_bound(const GridSpec& spec, int k);

struct ComparisonRow {
  int k = 0;
  int n = 0;
  std::vector<BoundValue> values;   // stable order: L,U,P,S (m=3) / A,C,B,D (m=4)
  std::vector<BoundName> best;      // all minimizers among applicable values
};

// Grid evaluation of upper_bounds, k-major then n. Ranges are inclusive.
std::vector<ComparisonRow> compare(int m, int k_lo, int k_hi, int n_lo, int n_hi);

// The argmin set at a single large n; callers cross-check it against the
// heuristic mod-5 expectation rather than assuming the table.
std::vector<BoundName> dominance_pattern(int m, int k, int n_large);

// Heuristic expectation: U (m=3) resp. C (m=4) iff k == 1 (mod 5),
// else P resp. B.
BoundName expected_large_n_dominant(int m, int k);

// CSV schema: header "m,k,n,<bounds>,best"; inapplicable cells empty;
// tied best names joined with '+'. Byte-stable across runs.
void write_comparison_csv(std::ostream& os, int m, const std::vector<ComparisonRow>& rows);

}  // namespace kroman
