#pragma once

#include <vector>

#include "kroman/grid.hpp"

namespace kroman {

// A vertex at which the [k]-RDF condition f(N[v]) >= k + |AN(v)| fails.
// Only vertices with f(v) < k can violate.
struct Violation {
  Vertex vertex;
  int closed_sum = 0;        // f(N[v])
  int active_neighbors = 0;  // |AN(v)|
  int required = 0;          // k + |AN(v)|

  friend bool operator==(const Violation&, const Violation&) = default;
};

// A labeling f : V -> {0, 1, ..., k+1}, stored fibre-major (n rows of m
// entries). Shape and codomain are enforced at construction; whether the
// labeling is a [k]-RDF is a separate question answered by validate().
class Labeling {
 public:
  Labeling(GridSpec spec, int k, std::vector<std::vector<int>> values);

  const GridSpec& spec() const { return spec_; }
  int k() const { return k_; }
  const std::vector<std::vector<int>>& values() const { return values_; }

  int at(Vertex v) const {
    spec_.require(v);
    return values_[v.i][v.j];
  }

  long long weight() const;

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  GridSpec spec_;
  int k_;
  std::vector<std::vector<int>> values_;
};

// Count of neighbors of v carrying a positive label.
int active_neighborhood_size(const Labeling& lab, Vertex v);

// All vertices failing the [k]-RDF condition, in row-major order.
// Empty result <=> lab is a [k]-Roman dominating function.
std::vector<Violation> validate(const Labeling& lab);

// Partition of V by label value: result[x] = vertices with label x,
// for x in 0..k+1.
std::vector<std::vector<Vertex>> level_sets(const Labeling& lab);

}  // namespace kroman
