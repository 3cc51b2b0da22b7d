#include "kroman/labeling.hpp"

#include <string>

namespace kroman {

Labeling::Labeling(GridSpec spec, int k, std::vector<std::vector<int>> values)
    : spec_(spec), k_(k), values_(std::move(values)) {
  if (k < 1) throw InputError("k must be >= 1, got " + std::to_string(k));
  if (static_cast<int>(values_.size()) != spec_.n())
    throw InputError("labeling must have exactly n = " + std::to_string(spec_.n()) + " fibres");
  for (const auto& row : values_) {
    if (static_cast<int>(row.size()) != spec_.m())
      throw InputError("each fibre must have exactly m = " + std::to_string(spec_.m()) +
                       " entries");
    for (int x : row)
      if (x < 0 || x > k + 1)
        throw InputError("label " + std::to_string(x) + " outside codomain {0,...," +
                         std::to_string(k + 1) + "}");
  }
}

long long Labeling::weight() const {
  long long w = 0;
  for (const auto& row : values_)
    for (int x : row) w += x;
  return w;
}

int active_neighborhood_size(const Labeling& lab, Vertex v) {
  int count = 0;
  for (Vertex u : lab.spec().neighbors(v))
    if (lab.at(u) > 0) ++count;
  return count;
}

std::vector<Violation> validate(const Labeling& lab) {
  std::vector<Violation> out;
  const int k = lab.k();
  for (int i = 0; i < lab.spec().n(); ++i) {
    for (int j = 0; j < lab.spec().m(); ++j) {
      Vertex v{i, j};
      if (lab.at(v) >= k) continue;
      int sum = lab.at(v);
      int active = 0;
      for (Vertex u : lab.spec().neighbors(v)) {
        sum += lab.at(u);
        if (lab.at(u) > 0) ++active;
      }
      if (sum < k + active) out.push_back({v, sum, active, k + active});
    }
  }
  return out;
}

std::vector<std::vector<Vertex>> level_sets(const Labeling& lab) {
  std::vector<std::vector<Vertex>> sets(lab.k() + 2);
  for (int i = 0; i < lab.spec().n(); ++i)
    for (int j = 0; j < lab.spec().m(); ++j) sets[lab.at({i, j})].push_back({i, j});
  return sets;
}

}  // namespace kroman
