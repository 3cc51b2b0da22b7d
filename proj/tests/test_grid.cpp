#include <algorithm>
#include <set>

#include <doctest.h>

#include "kroman/grid.hpp"

using namespace kroman;

namespace {

std::set<Vertex> nbr_set(const GridSpec& spec, Vertex v) {
  auto n = spec.neighbors(v);
  return {n.begin(), n.end()};
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(GridSpec::cylinder(2, 4), InputError);
  CHECK_THROWS_AS(GridSpec::cylinder(3, 0), InputError);
  CHECK_THROWS_AS(GridSpec::torus(3, 2), InputError);
  CHECK(GridSpec::cylinder(3, 1).vertex_count() == 3);
  CHECK(GridSpec::torus(5, 5).vertex_count() == 25);
}

TEST_CASE("neighbors: boundary fibre of a cylinder has degree 3") {
  auto got = nbr_set(GridSpec::cylinder(3, 4), {0, 0});
  CHECK(got == std::set<Vertex>{{0, 1}, {0, 2}, {1, 0}});
}

TEST_CASE("neighbors: interior cylinder vertex has degree 4") {
  auto got = nbr_set(GridSpec::cylinder(4, 3), {1, 2});
  CHECK(got == std::set<Vertex>{{1, 1}, {1, 3}, {0, 2}, {2, 2}});
}

TEST_CASE("neighbors: torus is 4-regular") {
  auto got = nbr_set(GridSpec::torus(5, 5), {0, 0});
  CHECK(got == std::set<Vertex>{{0, 1}, {0, 4}, {1, 0}, {4, 0}});
}

TEST_CASE("neighbors: out-of-range vertex rejected") {
  CHECK_THROWS_AS(GridSpec::cylinder(3, 4).neighbors({4, 0}), InputError);
  CHECK_THROWS_AS(GridSpec::cylinder(3, 4).neighbors({0, -1}), InputError);
}

TEST_CASE("closed neighborhoods") {
  auto c3 = GridSpec::cylinder(3, 1).closed_neighborhood({0, 0});
  CHECK(std::set<Vertex>(c3.begin(), c3.end()) == std::set<Vertex>{{0, 0}, {0, 1}, {0, 2}});
  CHECK(GridSpec::torus(5, 5).closed_neighborhood({2, 2}).size() == 5);
  auto c42 = GridSpec::cylinder(4, 2).closed_neighborhood({0, 1});
  CHECK(std::set<Vertex>(c42.begin(), c42.end()) ==
        std::set<Vertex>{{0, 1}, {0, 0}, {0, 2}, {1, 1}});
}

TEST_CASE("fibres") {
  CHECK(GridSpec::cylinder(3, 5).fibre(0) == std::vector<Vertex>{{0, 0}, {0, 1}, {0, 2}});
  CHECK(GridSpec::cylinder(4, 2).fibre(1) ==
        std::vector<Vertex>{{1, 0}, {1, 1}, {1, 2}, {1, 3}});
  CHECK(GridSpec::cylinder(5, 1).fibre(0).size() == 5);
  CHECK_THROWS_AS(GridSpec::cylinder(3, 5).fibre(5), InputError);
}

TEST_CASE("degree bounds") {
  CHECK(GridSpec::torus(5, 5).degree_bounds() == std::pair{4, 4});
  CHECK(GridSpec::cylinder(3, 2).degree_bounds() == std::pair{3, 3});
  CHECK(GridSpec::cylinder(4, 6).degree_bounds() == std::pair{3, 4});
  CHECK(GridSpec::cylinder(7, 1).degree_bounds() == std::pair{2, 2});
}

TEST_CASE("adjacency symmetry, edge counts, fibre partition (exhaustive m,n <= 8)") {
  for (int torus = 0; torus <= 1; ++torus) {
    for (int m = 3; m <= 8; ++m) {
      for (int n = torus ? 3 : 1; n <= 8; ++n) {
        GridSpec spec = torus ? GridSpec::torus(m, n) : GridSpec::cylinder(m, n);
        long long half_edges = 0;
        std::set<Vertex> seen;
        for (int i = 0; i < n; ++i) {
          auto fibre = spec.fibre(i);
          seen.insert(fibre.begin(), fibre.end());
          for (Vertex v : fibre) {
            auto nv = spec.neighbors(v);
            CHECK(std::set<Vertex>(nv.begin(), nv.end()).size() == nv.size());
            half_edges += nv.size();
            for (Vertex u : nv) {
              auto nu = spec.neighbors(u);
              CHECK(std::count(nu.begin(), nu.end(), v) == 1);
            }
          }
        }
        CHECK(int(seen.size()) == spec.vertex_count());
        long long expected = torus ? 2LL * m * n : 1LL * m * n + 1LL * m * (n - 1);
        CHECK(half_edges == 2 * expected);
      }
    }
  }
}
