#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kroman {

// Malformed input (out-of-range vertex, bad labeling shape, entry outside
// the codomain). Distinct from a labeling that is merely not a [k]-RDF.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters outside a construction's or formula's admissible range.
class ApplicabilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family : std::uint8_t { Cylinder, Torus };

struct Vertex {
  int i = 0;  // path (or second cycle) coordinate, in [0, n)
  int j = 0;  // cycle coordinate, in [0, m)

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// Implicit C_m [] P_n (cylinder) or C_m [] C_n (torus). Adjacency is
// computed from coordinates; the graph is never materialized.
class GridSpec {
 public:
  static GridSpec cylinder(int m, int n) { return GridSpec(Family::Cylinder, m, n); }
  static GridSpec torus(int m, int n) { return GridSpec(Family::Torus, m, n); }

  GridSpec(Family family, int m, int n) : family_(family), m_(m), n_(n) {
    if (m < 3) throw InputError("cycle length m must be >= 3, got " + std::to_string(m));
    int min_n = family == Family::Torus ? 3 : 1;
    if (n < min_n)
      throw InputError("n must be >= " + std::to_string(min_n) + " for this family, got " +
                       std::to_string(n));
  }

  Family family() const { return family_; }
  int m() const { return m_; }
  int n() const { return n_; }
  int vertex_count() const { return m_ * n_; }

  bool contains(Vertex v) const { return v.i >= 0 && v.i < n_ && v.j >= 0 && v.j < m_; }

  void require(Vertex v) const {
    if (!contains(v))
      throw InputError("vertex (" + std::to_string(v.i) + "," + std::to_string(v.j) +
                       ") out of range for " + std::to_string(m_) + "x" + std::to_string(n_));
  }

  // Two cycle neighbors always; path neighbors clipped for cylinders,
  // wrapped for tori. m >= 3 guarantees the cycle neighbors are distinct.
  std::vector<Vertex> neighbors(Vertex v) const {
    require(v);
    std::vector<Vertex> out;
    out.reserve(4);
    out.push_back({v.i, (v.j + m_ - 1) % m_});
    out.push_back({v.i, (v.j + 1) % m_});
    if (family_ == Family::Torus) {
      out.push_back({(v.i + n_ - 1) % n_, v.j});
      out.push_back({(v.i + 1) % n_, v.j});
    } else {
      if (v.i > 0) out.push_back({v.i - 1, v.j});
      if (v.i < n_ - 1) out.push_back({v.i + 1, v.j});
    }
    return out;
  }

  std::vector<Vertex> closed_neighborhood(Vertex v) const {
    auto out = neighbors(v);
    out.push_back(v);
    return out;
  }

  // The i-th fibre: the copy of C_m at path coordinate i, in cycle order.
  std::vector<Vertex> fibre(int i) const {
    if (i < 0 || i >= n_) throw InputError("fibre index out of range: " + std::to_string(i));
    std::vector<Vertex> out;
    out.reserve(m_);
    for (int j = 0; j < m_; ++j) out.push_back({i, j});
    return out;
  }

  std::pair<int, int> degree_bounds() const {
    if (family_ == Family::Torus) return {4, 4};
    if (n_ == 1) return {2, 2};
    if (n_ == 2) return {3, 3};
    return {3, 4};
  }

  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.family_ == b.family_ && a.m_ == b.m_ && a.n_ == b.n_;
  }

 private:
  Family family_;
  int m_;
  int n_;
};

}  // namespace kroman
