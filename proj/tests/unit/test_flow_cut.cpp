#include <doctest.h>

#include <sfvs/errors.hpp>
#include <sfvs/flow_cut.hpp>

#include "oracles.hpp"

using namespace sfvs;

namespace {

std::vector<Rational> weights(std::initializer_list<Rational> w) { return w; }

}  // namespace

TEST_CASE("path cut is the middle vertex") {
  const Graph g = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  const auto w = weights({1, 5, 1});
  const auto r = min_weight_vertex_cut({g, 0, 2, w, std::nullopt});
  CHECK(r.cut == VertexSet(3, {1}));
  CHECK(r.weight == Rational(5));
}

TEST_CASE("diamond needs both middle vertices") {
  // a=0, b=1, c=2, d=3
  const Graph g = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {0, 3}, {2, 3}});
  const auto w = weights({1, 1, 1, 2});
  const auto r = min_weight_vertex_cut({g, 0, 2, w, std::nullopt});
  CHECK(r.cut == VertexSet(4, {1, 3}));
  CHECK(r.weight == Rational(3));
}

TEST_CASE("terminals in different components need no cut") {
  const Graph g = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}});
  const auto w = weights({1, 1, 1, 1});
  const auto r = min_weight_vertex_cut({g, 0, 2, w, std::nullopt});
  CHECK(r.cut.empty());
  CHECK(r.weight == Rational(0));
}

TEST_CASE("two routes, cheapest vertex on each") {
  // a=0, b=1, c=2, d=3, e=4: a-b-c and a-d-e-c
  const Graph g = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {0, 3}, {3, 4}, {2, 4}});
  const auto w = weights({1, 3, 1, 1, 4});
  const auto r = min_weight_vertex_cut({g, 0, 2, w, std::nullopt});
  CHECK(r.weight == testing::brute_min_cut(g, g.vertices(), 0, 2, w));
  CHECK(r.weight == Rational(4));
  CHECK(r.cut == VertexSet(5, {1, 3}));
}

TEST_CASE("equal or adjacent terminals are infeasible") {
  const Graph g = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  const auto w = weights({1, 1, 1});
  CHECK_THROWS_AS(min_weight_vertex_cut({g, 0, 1, w, std::nullopt}), InfeasibleError);
  CHECK_THROWS_AS(min_weight_vertex_cut({g, 2, 2, w, std::nullopt}), InfeasibleError);
}

TEST_CASE("dead terminals are an input error") {
  const Graph g = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  const auto w = weights({1, 1, 1});
  CHECK_THROWS_AS(min_weight_vertex_cut({g, 0, 2, w, VertexSet(3, {1, 2})}), InputError);
}

TEST_CASE("alive restriction hides vertices") {
  // 0-1-2 and 0-3-2; vertex 3 is not alive, so only 1 must go
  const Graph g = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {0, 3}, {2, 3}});
  const auto w = weights({1, 2, 1, 1});
  const auto r = min_weight_vertex_cut({g, 0, 2, w, VertexSet(4, {0, 1, 2})});
  CHECK(r.cut == VertexSet(4, {1}));
}

TEST_CASE("random cuts match brute force") {
  sfvs::Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 10));
    const Graph g = random_gnp(n, rng.unit(), rng);
    std::vector<Rational> w;
    for (int i = 0; i < n; ++i) w.emplace_back(rng.uniform(1, 9), rng.uniform(1, 5));
    const auto a = static_cast<Vertex>(rng.uniform(0, n - 1));
    const auto b = static_cast<Vertex>(rng.uniform(0, n - 1));
    if (a == b || g.adjacent(a, b)) continue;
    const auto r = min_weight_vertex_cut({g, a, b, w, std::nullopt});
    REQUIRE(r.weight == testing::brute_min_cut(g, g.vertices(), a, b, w));
    REQUIRE(!r.cut.contains(a));
    REQUIRE(!r.cut.contains(b));
    REQUIRE(testing::separates(g, g.vertices(), r.cut, a, b));
  }
}
