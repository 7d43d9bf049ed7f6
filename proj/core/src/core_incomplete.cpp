#include "sfvs/core_incomplete.hpp"

#include <set>
#include <vector>

#include "sfvs/cotree.hpp"
#include "sfvs/errors.hpp"
#include "sfvs/parallel.hpp"
#include "sfvs/reduced_solver.hpp"

namespace sfvs {

namespace {

// Calls f on every subset of `pool` with at most `limit` members.
template <typename F>
void small_subsets(const std::vector<Vertex>& pool, int limit, std::size_t universe, F&& f) {
  VertexSet cur(universe);
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    f(cur);
    if (left == 0) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      cur.insert(pool[i]);
      self(self, i + 1, left - 1);
      cur.erase(pool[i]);
    }
  };
  rec(rec, 0, limit);
}

bool has_independent(const Graph& g, const std::vector<Vertex>& pool, std::size_t from, int need,
                     std::vector<Vertex>& chosen) {
  if (need == 0) return true;
  for (std::size_t i = from; i + static_cast<std::size_t>(need) <= pool.size(); ++i) {
    bool ok = true;
    for (Vertex c : chosen) ok = ok && !g.adjacent(c, pool[i]);
    if (!ok) continue;
    chosen.push_back(pool[i]);
    if (has_independent(g, pool, i + 1, need - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

struct Task {
  VertexSet u;
  VertexSet deleted;
};

}  // namespace

VertexSet core_of(const Graph& g, const VertexSet& forest, int s) {
  VertexSet core(forest.universe());
  forest.for_each([&](Vertex v) {
    int deg = 0;
    for (Vertex w : g.neighbours(v)) deg += forest.contains(w) ? 1 : 0;
    if (deg <= 2 * s - 1) core.insert(v);
  });
  return core;
}

bool is_core_incomplete(const Graph& g, const VertexSet& forest, int s) {
  std::vector<Vertex> chosen;
  return has_independent(g, core_of(g, forest, s).to_vector(), 0, s, chosen);
}

std::optional<Solution> best_core_incomplete(const Instance& inst, int s, SolveContext& ctx) {
  if (s < 2) throw InputError("core-incomplete solutions need s >= 2");
  const Graph& g = inst.graph();
  const std::size_t universe = static_cast<std::size_t>(inst.order());
  const int per_vertex = 2 * s - 1;

  // Guess U (independent, kept) and, for each u in U, the at most 2s-1
  // neighbours it keeps. Everything else next to U goes.
  std::vector<Task> tasks;
  std::vector<Vertex> u;
  auto enumerate_u = [&](auto&& self, Vertex from) -> void {
    if (static_cast<int>(u.size()) == s) {
      std::set<VertexSet> partial{VertexSet(universe)};
      for (Vertex x : u) {
        const auto nbrs = g.neighbourhood(x);
        std::set<VertexSet> grown;
        small_subsets(nbrs.to_vector(), per_vertex, universe, [&](const VertexSet& keep) {
          const VertexSet gone = nbrs - keep;
          for (const auto& d : partial) grown.insert(d | gone);
        });
        partial = std::move(grown);
      }
      const VertexSet uset(universe, std::span<const Vertex>(u));
      for (const auto& d : partial) tasks.push_back({uset, d});
      return;
    }
    for (Vertex v = from; v < inst.order(); ++v) {
      bool ok = true;
      for (Vertex x : u) ok = ok && !g.adjacent(x, v);
      if (!ok) continue;
      u.push_back(v);
      self(self, v + 1);
      u.pop_back();
    }
  };
  enumerate_u(enumerate_u, 0);

  const auto& cfg = ctx.config().reduced;
  return parallel_best(ctx.config().threads, tasks.size(), [&](std::size_t i) -> std::optional<Solution> {
    const Task& task = tasks[i];
    const VertexSet domain = g.vertices() - task.deleted;
    VertexSet modulator = task.u;
    task.u.for_each([&](Vertex x) { modulator |= g.neighbourhood(x) & domain; });

    auto dec = decompose_with_modulator(g, domain, modulator);
    if (!dec) {
      ctx.discard(Branch::CoreIncomplete);
      return std::nullopt;
    }
    const bool brute = cfg.backend == Backend::Brute ||
                       (cfg.backend == Backend::Auto && static_cast<int>(domain.count()) <= cfg.brute_threshold);
    if (!brute) {
      // A smaller modulator means fewer kept subsets to enumerate.
      (modulator - task.u).for_each([&](Vertex z) {
        VertexSet smaller = dec->modulator;
        smaller.erase(z);
        if (auto d = decompose_with_modulator(g, domain, smaller)) dec = std::move(d);
      });
    }
    auto found = solve_reduced(*dec, inst, task.u, cfg);
    return ctx.record(Branch::CoreIncomplete, std::move(found));
  });
}

std::optional<Solution> best_core_incomplete(const Instance& inst, int s) {
  SolveContext ctx;
  return best_core_incomplete(inst, s, ctx);
}

}  // namespace sfvs
