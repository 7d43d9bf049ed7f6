#include "sfvs/pipeline.hpp"

#include <algorithm>
#include <vector>

#include "sfvs/core_incomplete.hpp"
#include "sfvs/errors.hpp"
#include "sfvs/flow_cut.hpp"
#include "sfvs/parallel.hpp"
#include "sfvs/part_solvers.hpp"

namespace sfvs {

namespace {

constexpr int kDefaultValidationLimit = 40;

ClassCheck check_class(const Instance& inst, int s, const std::optional<bool>& validate) {
  ClassCheck out;
  out.s = s;
  if (!validate.value_or(inst.order() <= kDefaultValidationLimit)) return out;
  out.witness = find_induced_sp1_p4(inst.graph(), s);
  out.status = out.witness ? ClassStatus::Violated : ClassStatus::Free;
  return out;
}

SolveReport finish(const Instance& inst, std::optional<Solution> best, const SolveContext& ctx, ClassCheck check) {
  if (!best) throw std::logic_error("no candidate survived; the empty forest should always qualify");
  SolveReport report;
  report.best = *std::move(best);
  report.stats = ctx.stats();
  report.class_check = std::move(check);
  if (const auto& k = inst.threshold()) report.decision = inst.total_weight() - report.best.weight <= *k;
  return report;
}

// Both T-vertices of the pair stay; one of them is a leaf hanging off the other.
std::optional<Solution> pair_degree_one(const Instance& inst, Vertex leaf, Vertex hub, SolveContext& ctx) {
  const Graph& g = inst.graph();
  VertexSet alive = g.vertices() - g.neighbourhood(leaf);
  alive.erase(leaf);
  alive.insert(hub);
  // T' is T restricted to alive, which the part solvers already assume.
  std::optional<Solution> best;
  auto lift = [&](std::optional<Solution> part) {
    if (!part) return;
    VertexSet f = part->forest;
    f.insert(leaf);
    std::vector<Vertex> nbrs;
    for (Vertex w : g.neighbours(hub))
      if (f.contains(w)) nbrs.push_back(w);
    keep_better(best, ctx.offer(inst, Branch::PairDegreeOne, std::move(f), hub, std::move(nbrs),
                                {std::min(leaf, hub), std::max(leaf, hub)}));
  };
  lift(best_le1_part(inst, alive, hub, ctx));
  lift(best_2part(inst, alive, hub, ctx));
  return best;
}

std::optional<Solution> pair_degree_two(const Instance& inst, Vertex u1, Vertex u2, SolveContext& ctx) {
  const Graph& g = inst.graph();
  const VertexSet n1 = g.neighbourhood(u1) - inst.terminals();
  const VertexSet n2 = g.neighbourhood(u2) - inst.terminals();
  std::optional<Solution> best;
  n1.for_each([&](Vertex v1) {
    n2.for_each([&](Vertex v2) {
      if (v1 == v2 || g.adjacent(v1, v2) || g.adjacent(v1, u2) || g.adjacent(v2, u1)) {
        ctx.discard(Branch::PairDegreeTwo);
        return;
      }
      VertexSet alive = g.vertices() - inst.terminals() - g.neighbourhood(u1) - g.neighbourhood(u2);
      alive.insert(v1);
      alive.insert(v2);
      VertexSet f;
      try {
        f = alive - min_weight_vertex_cut(CutInstance{g, v1, v2, inst.weights(), alive}).cut;
      } catch (const InfeasibleError&) {
        ctx.discard(Branch::PairDegreeTwo);
        return;
      }
      f.insert(u1);
      f.insert(u2);
      keep_better(best, ctx.offer(inst, Branch::PairDegreeTwo, std::move(f), -1, {v1, v2}, {u1, u2}));
    });
  });
  return best;
}

}  // namespace

std::string_view to_string(ClassStatus s) {
  switch (s) {
    case ClassStatus::Free:
      return "free";
    case ClassStatus::Violated:
      return "violated";
    case ClassStatus::Skipped:
      break;
  }
  return "skipped";
}

SolveReport solve_weighted_2p1p4(const Instance& inst, const SolveOptions& options) {
  SolveContext ctx(options.config, options.observer);
  ClassCheck check = check_class(inst, 2, options.validate_class);
  const Graph& g = inst.graph();
  const VertexSet all = g.vertices();

  std::optional<Solution> best;
  keep_better(best, best_core_incomplete(inst, 2, ctx));
  keep_better(best, best_le1_part(inst, all, std::nullopt, ctx));
  keep_better(best, best_2part(inst, all, std::nullopt, ctx));
  keep_better(best, best_3part(inst, all, ctx));

  std::vector<Edge> pairs;
  for (auto [a, b] : g.edges())
    if (inst.is_terminal(a) && inst.is_terminal(b)) pairs.emplace_back(a, b);
  keep_better(best, parallel_best(options.config.threads, pairs.size(), [&](std::size_t i) {
    const auto [u1, u2] = pairs[i];
    std::optional<Solution> local;
    keep_better(local, pair_degree_one(inst, u1, u2, ctx));
    keep_better(local, pair_degree_one(inst, u2, u1, ctx));
    keep_better(local, pair_degree_two(inst, u1, u2, ctx));
    return local;
  }));
  return finish(inst, std::move(best), ctx, std::move(check));
}

SolveReport solve_unweighted_sp1p4(const Instance& inst, int s, const SolveOptions& options) {
  if (s < 0) throw InputError("s must be non-negative");
  if (!inst.has_unit_weights()) throw InputError("the unweighted solver needs unit weights");
  SolveContext ctx(options.config, options.observer);
  ClassCheck check = check_class(inst, s, options.validate_class);
  const int algo_s = std::max(s, 2);
  const Graph& g = inst.graph();
  const std::size_t universe = static_cast<std::size_t>(inst.order());

  std::optional<Solution> best = best_core_incomplete(inst, algo_s, ctx);

  // Core-complete: at most 2s-2 T-vertices W, and then at most |W| deletions
  // X among the non-T vertices, since otherwise V \ T is heavier.
  const auto terms = inst.terminals().to_vector();
  const auto plain = (g.vertices() - inst.terminals()).to_vector();
  const int max_w = std::min<int>(2 * algo_s - 2, static_cast<int>(terms.size()));
  std::vector<VertexSet> ws;
  {
    VertexSet cur(universe);
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
      ws.push_back(cur);
      if (left == 0) return;
      for (std::size_t i = from; i < terms.size(); ++i) {
        cur.insert(terms[i]);
        self(self, i + 1, left - 1);
        cur.erase(terms[i]);
      }
    };
    rec(rec, 0, max_w);
  }
  const VertexSet plain_set(universe, std::span<const Vertex>(plain));
  keep_better(best, parallel_best(options.config.threads, ws.size(), [&](std::size_t i) {
    const VertexSet& w = ws[i];
    std::optional<Solution> local;
    VertexSet x(universe);
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
      keep_better(local, ctx.offer(inst, Branch::CoreCompleteEnum, w | (plain_set - x)));
      if (left == 0) return;
      for (std::size_t j = from; j < plain.size(); ++j) {
        x.insert(plain[j]);
        self(self, j + 1, left - 1);
        x.erase(plain[j]);
      }
    };
    rec(rec, 0, static_cast<int>(w.count()));
    return local;
  }));
  return finish(inst, std::move(best), ctx, std::move(check));
}

}  // namespace sfvs
