#include "kroman/bounds.hpp"

#include <numeric>
#include <ostream>

#include "kroman/constructions.hpp"

namespace kroman {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

BoundValue inapplicable(BoundName name) { return {name, false, 0, std::nullopt}; }

BoundValue make(BoundName name, long long value, std::optional<Rational> relaxed = std::nullopt) {
  return {name, true, value, std::move(relaxed)};
}

}  // namespace

std::string to_string(BoundName name) {
  switch (name) {
    case BoundName::L: return "L";
    case BoundName::U: return "U";
    case BoundName::P: return "P";
    case BoundName::S: return "S";
    case BoundName::A: return "A";
    case BoundName::C: return "C";
    case BoundName::B: return "B";
    case BoundName::D: return "D";
    case BoundName::LowerRegular: return "lower-regular";
    case BoundName::LowerCylinder: return "lower-cylinder";
  }
  return "?";
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw InputError("rational with zero denominator");
  if (den < 0) { num = -num; den = -den; }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) { num /= g; den /= g; }
}

long long Rational::ceil() const { return ceil_div(num, den); }

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::vector<BoundValue> upper_bounds(int m, int n, int k) {
  if (m != 3 && m != 4) throw ApplicabilityError("upper bounds cataloged for m in {3,4} only");
  if (n < 1 || k < 1) throw ApplicabilityError("need n >= 1 and k >= 1");

  long long a4 = ceil_div(k + 4, 5);
  long long a5 = ceil_div(k + 5, 5);
  long long b4 = ceil_div(k + 3 - a4, 3);
  long long b5 = ceil_div(k + 3 - a5, 3);
  bool interior = n >= 4;
  bool sd = interior && SDParams::admissible(k);
  auto p = SDParams::for_k(k);

  std::vector<BoundValue> out;
  if (m == 3) {
    out.push_back(interior ? make(BoundName::L, 1LL * n * k + 2) : inapplicable(BoundName::L));
    out.push_back(interior ? make(BoundName::U, 3LL * (n - 2) * a4 + 6 * b4,
                                  Rational(3LL * n * k + 27 * n + 2 * k - 2, 5))
                           : inapplicable(BoundName::U));
    out.push_back(interior ? make(BoundName::P, 3LL * (n - 2) * a5 + 6 * b5 - ceil_div(n, 2),
                                  Rational(6LL * k * n + 4 * k + 55 * n - 20, 10))
                           : inapplicable(BoundName::P));
    out.push_back(sd ? make(BoundName::S, 2LL * (n - 2) * p.A + 4 * p.B + 2 * p.C,
                            Rational(1LL * n * k + 2 * k + 8 * n + 12, 2))
                     : inapplicable(BoundName::S));
  } else {
    out.push_back(make(BoundName::A, 1LL * n * (k + 1)));
    out.push_back(interior ? make(BoundName::C, 4LL * (n - 2) * a4 + 8 * b4,
                                  Rational(12LL * n * k + 8 * k + 108 * n - 8, 15))
                           : inapplicable(BoundName::C));
    out.push_back(interior ? make(BoundName::B, 4LL * (n - 2) * a5 + 8 * b5 - ceil_div(2 * n, 3),
                                  Rational(12LL * n * k + 8 * k + 110 * n - 40, 15))
                           : inapplicable(BoundName::B));
    out.push_back(sd ? make(BoundName::D, 3LL * (n - 2) * p.A + 6 * p.B + 2 * p.C,
                            Rational(3LL * n * k + 5 * k + 24 * n + 32, 4))
                     : inapplicable(BoundName::D));
  }
  return out;
}

BoundValue lower_bound(const GridSpec& spec, int k) {
  if (k < 1) throw ApplicabilityError("need k >= 1");
  long long mn = spec.vertex_count();
  // Every cylinder inherits (k+1)mn/5 from its toroidal supergraph.
  Rational best(1LL * (k + 1) * mn, 5);
  BoundName name = spec.family() == Family::Torus ? BoundName::LowerRegular
                                                  : BoundName::LowerCylinder;
  auto [lo, hi] = spec.degree_bounds();
  if (lo == hi) {
    Rational regular(1LL * (k + 1) * mn, hi + 1);
    if (regular > best) {
      best = regular;
      name = BoundName::LowerRegular;
    }
  }
  return {name, true, best.ceil(), best};
}

std::vector<ComparisonRow> compare(int m, int k_lo, int k_hi, int n_lo, int n_hi) {
  if (k_lo > k_hi || n_lo > n_hi) throw ApplicabilityError("empty comparison range");
  std::vector<ComparisonRow> rows;
  for (int k = k_lo; k <= k_hi; ++k) {
    for (int n = n_lo; n <= n_hi; ++n) {
      ComparisonRow row{k, n, upper_bounds(m, n, k), {}};
      long long best = -1;
      for (const auto& bv : row.values)
        if (bv.applicable && (best < 0 || bv.value < best)) best = bv.value;
      for (const auto& bv : row.values)
        if (bv.applicable && bv.value == best) row.best.push_back(bv.name);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<BoundName> dominance_pattern(int m, int k, int n_large) {
  return compare(m, k, k, n_large, n_large).front().best;
}

BoundName expected_large_n_dominant(int m, int k) {
  if (m == 3) return k % 5 == 1 ? BoundName::U : BoundName::P;
  if (m == 4) return k % 5 == 1 ? BoundName::C : BoundName::B;
  throw ApplicabilityError("dominance table defined for m in {3,4} only");
}

void write_comparison_csv(std::ostream& os, int m, const std::vector<ComparisonRow>& rows) {
  const char* header = m == 3 ? "m,k,n,L,U,P,S,best" : "m,k,n,A,C,B,D,best";
  os << header << "\n";
  for (const auto& row : rows) {
    os << m << "," << row.k << "," << row.n;
    for (const auto& bv : row.values) {
      os << ",";
      if (bv.applicable) os << bv.value;
    }
    os << ",";
    for (std::size_t i = 0; i < row.best.size(); ++i) {
      if (i) os << "+";
      os << to_string(row.best[i]);
    }
    os << "\n";
  }
}

}  // namespace kroman
