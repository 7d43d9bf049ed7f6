#include <doctest.h>

#include <sfvs/checker.hpp>
#include <sfvs/cotree.hpp>
#include <sfvs/errors.hpp>
#include <sfvs/oracle.hpp>
#include <sfvs/reduced_solver.hpp>

#include "oracles.hpp"

using namespace sfvs;

namespace {

Instance make(int n, std::vector<Edge> edges, std::initializer_list<Vertex> t, std::vector<Rational> w = {}) {
  return Instance(Graph::from_edges(n, edges), VertexSet(static_cast<std::size_t>(n), t), std::move(w));
}

Cotree cotree_of(const Graph& g) {
  auto built = build_cotree(g);
  REQUIRE(built.ok());
  return *built.cotree;
}

Solution with_modulator(const Instance& inst, VertexSet p) {
  auto dec = decompose_with_modulator(inst.graph(), inst.graph().vertices(), p);
  REQUIRE(dec);
  auto sol = max_tforest_with_modulator(*dec, inst, VertexSet(p.universe()));
  REQUIRE(sol);
  return *sol;
}

}  // namespace

TEST_CASE("cograph dp: triangle with one terminal keeps two vertices") {
  const auto inst = make(3, {{0, 1}, {0, 2}, {1, 2}}, {0});
  const auto sol = max_tforest_cograph(cotree_of(inst.graph()), inst);
  CHECK(sol.weight == Rational(2));
  CHECK(sol.certified);
}

TEST_CASE("cograph dp: C4 with one terminal keeps three vertices") {
  const auto inst = make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {0});
  const auto sol = max_tforest_cograph(cotree_of(inst.graph()), inst);
  CHECK(sol.weight == Rational(3));
}

TEST_CASE("cograph dp: no terminals keeps everything") {
  Rng rng(5);
  const Graph g = random_cograph(12, 0.6, rng);
  const Instance inst(g, VertexSet(12));
  const auto sol = max_tforest_cograph(cotree_of(g), inst);
  CHECK(sol.forest == g.vertices());
}

TEST_CASE("cograph dp: vertex count mismatch is an input error") {
  const auto inst = make(3, {{0, 1}}, {0});
  const auto other = cotree_of(Graph::from_edges(2, std::vector<Edge>{{0, 1}}));
  CHECK_THROWS_AS(max_tforest_cograph(other, inst), InputError);
}

TEST_CASE("join rules agree with the checker on small cographs") {
  Rng rng(11);
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : testing::all_cographs(n)) {
      const Cotree tree = cotree_of(g);
      for (int rep = 0; rep < 4; ++rep) {
        VertexSet t(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v)
          if (rng.bernoulli(0.4)) t.insert(v);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
          VertexSet s(static_cast<std::size_t>(n));
          for (Vertex v = 0; v < n; ++v)
            if ((mask >> v) & 1) s.insert(v);
          REQUIRE(cograph_signature_feasible(tree, t, s) == is_t_forest(g, s, t).accepted);
        }
      }
    }
}

TEST_CASE("cograph dp matches brute force on random cographs") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 12));
    const auto inst = testing::decorate(random_cograph(n, 0.5, rng), rng, 0.4, trial % 2 == 0);
    const auto dp = max_tforest_cograph(cotree_of(inst.graph()), inst);
    REQUIRE(dp.weight == brute_force_max_tforest(inst).weight);
  }
}

TEST_CASE("modulator: empty modulator matches the cograph dp") {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = testing::decorate(random_cograph(9, 0.5, rng), rng, 0.4, false);
    const auto a = max_tforest_cograph(cotree_of(inst.graph()), inst);
    const auto b = with_modulator(inst, VertexSet(9));
    CHECK(a.weight == b.weight);
  }
}

TEST_CASE("modulator: triangle with the terminal in the modulator") {
  const auto inst = make(3, {{0, 1}, {0, 2}, {1, 2}}, {0});
  CHECK(with_modulator(inst, VertexSet(3, {0})).weight == Rational(2));
}

TEST_CASE("modulator: C5 with two adjacent modulator vertices") {
  // cycle 0-1-2-3-4-0, modulator {0, 1}, remainder 2-3-4 is a path on three vertices
  const auto inst = make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}, {0});
  const auto sol = with_modulator(inst, VertexSet(5, {0, 1}));
  CHECK(sol.weight == brute_force_max_tforest(inst).weight);
  CHECK(sol.weight == Rational(4));
}

TEST_CASE("modulator: stars with equal summaries but different cycles") {
  // Two components that look alike from outside: a T-leaf star and a
  // T-centred star, both hanging from the same pair of modulator neighbours.
  // a(0) - b1(1), a - k1(2), a - k2(3); q(4) sees k1 and k2.
  const auto leafy = make(5, {{0, 1}, {0, 2}, {0, 3}, {2, 4}, {3, 4}}, {1});
  const auto centred = make(5, {{0, 1}, {0, 2}, {0, 3}, {2, 4}, {3, 4}}, {0});
  CHECK(with_modulator(leafy, VertexSet(5, {4})).weight == Rational(5));
  CHECK(with_modulator(centred, VertexSet(5, {4})).weight == Rational(4));
}

TEST_CASE("modulator: required vertices are kept") {
  const auto inst = make(3, {{0, 1}, {0, 2}, {1, 2}}, {0});
  auto dec = decompose_with_modulator(inst.graph(), inst.graph().vertices(), VertexSet(3, {2}));
  REQUIRE(dec);
  const auto sol = max_tforest_with_modulator(*dec, inst, VertexSet(3, {0, 1}));
  REQUIRE(sol);
  CHECK(sol->forest == VertexSet(3, {0, 1}));
}

TEST_CASE("modulator: oversized modulator is a capacity error") {
  const auto inst = make(4, {}, {});
  auto dec = decompose_with_modulator(inst.graph(), inst.graph().vertices(), VertexSet(4, {0, 1, 2}));
  REQUIRE(dec);
  CHECK_THROWS_AS(max_tforest_with_modulator(*dec, inst, VertexSet(4), 2), CapacityError);
}

TEST_CASE("modulator dp matches brute force on cographs plus a modulator") {
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 10));
    const int k = static_cast<int>(rng.uniform(0, 4));
    auto [g, p] = testing::add_modulator(random_cograph(n, 0.5, rng), k, 0.5, rng);
    const auto inst = testing::decorate(g, rng, 0.4, trial % 3 != 0);
    const auto sol = with_modulator(inst, p);
    INFO("trial " << trial);
    REQUIRE(sol.weight == brute_force_max_tforest(inst).weight);
  }
}

TEST_CASE("backend switch") {
  CHECK(parse_backend("dp") == Backend::Dp);
  CHECK(to_string(Backend::Brute) == "brute");
  CHECK_THROWS_AS(parse_backend("ilp"), InputError);
}
