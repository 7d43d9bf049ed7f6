#include "bench_suite.hpp"

#include <chrono>
#include <functional>

#include <sfvs/checker.hpp>
#include <sfvs/cotree.hpp>
#include <sfvs/flow_cut.hpp>
#include <sfvs/generators.hpp>
#include <sfvs/pipeline.hpp>
#include <sfvs/reduced_solver.hpp>

namespace sfvs::cli {

namespace {

double time_ms(const std::function<void()>& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

VertexSet random_terminals(int n, double p, Rng& rng) {
  VertexSet t(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    if (rng.bernoulli(p)) t.insert(v);
  return t;
}

std::vector<BenchCase> cograph_suite(std::uint64_t seed) {
  std::vector<BenchCase> out;
  Rng rng(seed);
  for (int n : {250, 1000, 2000}) {
    Graph g = random_cograph(n, 0.5, rng);
    Instance inst(g, random_terminals(n, 0.3, rng));
    BenchCase c{"cograph_dp", n, static_cast<std::int64_t>(g.size()), 0};
    c.ms = time_ms([&] {
      auto built = build_cotree(inst.graph());
      (void)max_tforest_cograph(*built.cotree, inst);
    });
    out.push_back(c);
  }
  return out;
}

std::vector<BenchCase> checker_suite(std::uint64_t seed) {
  std::vector<BenchCase> out;
  Rng rng(seed);
  for (int n : {1000, 10000, 100000}) {
    const std::int64_t m = 3LL * n;
    Graph g = random_sparse(n, m, rng);
    const VertexSet t = random_terminals(n, 0.01, rng);
    BenchCase c{"t_forest_check", n, m, 0};
    c.ms = time_ms([&] { (void)is_t_forest(g, t); });
    out.push_back(c);
  }
  return out;
}

std::vector<BenchCase> flow_suite(std::uint64_t seed) {
  std::vector<BenchCase> out;
  Rng rng(seed);
  for (int n : {200, 1000, 5000}) {
    Graph g = random_sparse(n, 4LL * n, rng);
    std::vector<Rational> w;
    for (int i = 0; i < n; ++i) w.emplace_back(rng.uniform(1, 9), rng.uniform(1, 4));
    Vertex a = 0, b = 1;
    while (g.adjacent(a, b)) ++b;
    BenchCase c{"vertex_cut", n, static_cast<std::int64_t>(g.size()), 0};
    c.ms = time_ms([&] { (void)min_weight_vertex_cut({g, a, b, w, std::nullopt}); });
    out.push_back(c);
  }
  return out;
}

std::vector<BenchCase> pipeline_suite(std::uint64_t seed) {
  std::vector<BenchCase> out;
  for (int n : {8, 12, 16}) {
    GeneratorSpec spec;
    spec.family = Family::Sp1p4FreeFiltered;
    spec.n = n;
    spec.seed = seed;
    spec.unit_weights = false;
    const Instance inst = generate(spec).instance;
    BenchCase c{"weighted_pipeline", n, static_cast<std::int64_t>(inst.graph().size()), 0};
    c.ms = time_ms([&] { (void)solve_weighted_2p1p4(inst); });
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<std::string> bench_suite_names() { return {"cograph", "checker", "flow", "pipeline", "all"}; }

std::optional<std::vector<BenchCase>> run_bench_suite(const std::string& name, std::uint64_t seed) {
  if (name == "cograph") return cograph_suite(seed);
  if (name == "checker") return checker_suite(seed);
  if (name == "flow") return flow_suite(seed);
  if (name == "pipeline") return pipeline_suite(seed);
  if (name == "all") {
    std::vector<BenchCase> all;
    for (auto* f : {cograph_suite, checker_suite, flow_suite, pipeline_suite}) {
      auto part = f(seed);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  return std::nullopt;
}

}  // namespace sfvs::cli
