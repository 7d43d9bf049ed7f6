#include <benchmark/benchmark.h>

#include <sfvs/checker.hpp>
#include <sfvs/cotree.hpp>
#include <sfvs/flow_cut.hpp>
#include <sfvs/generators.hpp>
#include <sfvs/pipeline.hpp>
#include <sfvs/reduced_solver.hpp>

namespace {

using namespace sfvs;

VertexSet random_terminals(int n, double p, Rng& rng) {
  VertexSet t(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    if (rng.bernoulli(p)) t.insert(v);
  return t;
}

void BM_CographDp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  const Instance inst(random_cograph(n, 0.5, rng), random_terminals(n, 0.3, rng));
  const Cotree cotree = *build_cotree(inst.graph()).cotree;
  for (auto _ : state) benchmark::DoNotOptimize(max_tforest_cograph(cotree, inst));
}
BENCHMARK(BM_CographDp)->Arg(250)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_BuildCotree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(8);
  const Graph g = random_cograph(n, 0.5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(build_cotree(g));
}
BENCHMARK(BM_BuildCotree)->Arg(250)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_TForestCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(9);
  const Graph g = random_sparse(n, 3LL * n, rng);
  const VertexSet t = random_terminals(n, 0.01, rng);
  for (auto _ : state) benchmark::DoNotOptimize(is_t_forest(g, t));
}
BENCHMARK(BM_TForestCheck)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_VertexCut(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(10);
  const Graph g = random_sparse(n, 4LL * n, rng);
  std::vector<Rational> w;
  for (int i = 0; i < n; ++i) w.emplace_back(rng.uniform(1, 9), rng.uniform(1, 4));
  Vertex b = 1;
  while (g.adjacent(0, b)) ++b;
  for (auto _ : state) benchmark::DoNotOptimize(min_weight_vertex_cut({g, 0, b, w, std::nullopt}));
}
BENCHMARK(BM_VertexCut)->Arg(200)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_WeightedPipeline(benchmark::State& state) {
  GeneratorSpec spec;
  spec.family = Family::Sp1p4FreeFiltered;
  spec.n = static_cast<int>(state.range(0));
  spec.seed = 11;
  spec.unit_weights = false;
  const Instance inst = generate(spec).instance;
  for (auto _ : state) benchmark::DoNotOptimize(solve_weighted_2p1p4(inst));
}
BENCHMARK(BM_WeightedPipeline)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
