#include "sfvs/part_solvers.hpp"

#include <array>
#include <vector>

#include "sfvs/errors.hpp"
#include "sfvs/flow_cut.hpp"
#include "sfvs/parallel.hpp"

namespace sfvs {

namespace {

std::vector<Vertex> centers(const Instance& inst, const VertexSet& alive, std::optional<Vertex> center) {
  if (!center) return (inst.terminals() & alive).to_vector();
  inst.graph().check_vertex(*center);
  if (!inst.is_terminal(*center)) throw InputError("a fixed center must be a terminal");
  if (!alive.contains(*center)) return {};
  return {*center};
}

// alive minus a minimum vertex cut between a and b inside alive.
std::optional<VertexSet> cut_away(const Instance& inst, VertexSet alive, Vertex a, Vertex b) {
  try {
    auto cut = min_weight_vertex_cut(CutInstance{inst.graph(), a, b, inst.weights(), alive});
    return alive - cut.cut;
  } catch (const InfeasibleError&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<Solution> best_le1_part(const Instance& inst, const VertexSet& alive, std::optional<Vertex> center,
                                      SolveContext& ctx) {
  const Graph& g = inst.graph();
  const VertexSet plain = alive - inst.terminals();
  std::optional<Solution> best;
  if (!center) keep_better(best, ctx.offer(inst, Branch::Le1Part, plain));
  const auto us = centers(inst, alive, center);
  keep_better(best, parallel_best(ctx.config().threads, us.size(), [&](std::size_t i) {
    const Vertex u = us[i];
    const VertexSet nu = g.neighbourhood(u);
    VertexSet base = plain - nu;
    base.insert(u);
    std::optional<Solution> local = ctx.offer(inst, Branch::Le1Part, base, u);
    (nu & plain).for_each([&](Vertex v) {
      VertexSet f = base;
      f.insert(v);
      keep_better(local, ctx.offer(inst, Branch::Le1Part, std::move(f), u, {v}));
    });
    return local;
  }));
  return best;
}

std::optional<Solution> best_2part(const Instance& inst, const VertexSet& alive, std::optional<Vertex> center,
                                   SolveContext& ctx) {
  const Graph& g = inst.graph();
  const auto us = centers(inst, alive, center);
  return parallel_best(ctx.config().threads, us.size(), [&](std::size_t i) {
    const Vertex u = us[i];
    const VertexSet nu = g.neighbourhood(u) & alive;
    const auto cand = (nu - inst.terminals()).to_vector();
    const VertexSet others = inst.terminals() - VertexSet(alive.universe(), {u});
    std::optional<Solution> local;
    for (std::size_t a = 0; a < cand.size(); ++a)
      for (std::size_t b = a + 1; b < cand.size(); ++b) {
        const Vertex v1 = cand[a];
        const Vertex v2 = cand[b];
        if (g.adjacent(v1, v2)) {
          ctx.discard(Branch::TwoPart);
          continue;
        }
        VertexSet kept = alive - nu - others;
        kept.insert(v1);
        kept.insert(v2);
        kept.erase(u);
        auto rest = cut_away(inst, std::move(kept), v1, v2);
        if (!rest) {
          ctx.discard(Branch::TwoPart);
          continue;
        }
        rest->insert(u);
        keep_better(local, ctx.offer(inst, Branch::TwoPart, std::move(*rest), u, {v1, v2}));
      }
    return local;
  });
}

std::optional<Solution> best_3part(const Instance& inst, const VertexSet& alive, SolveContext& ctx) {
  const Graph& g = inst.graph();
  const auto us = (inst.terminals() & alive).to_vector();
  const std::size_t universe = alive.universe();
  return parallel_best(ctx.config().threads, us.size(), [&](std::size_t i) {
    const Vertex u = us[i];
    const VertexSet nu = g.neighbourhood(u) & alive;
    const auto cand = (nu - inst.terminals()).to_vector();
    const VertexSet others = inst.terminals() - VertexSet(universe, {u});
    std::optional<Solution> local;
    for (std::size_t a = 0; a < cand.size(); ++a)
      for (std::size_t b = a + 1; b < cand.size(); ++b)
        for (std::size_t c = b + 1; c < cand.size(); ++c) {
          const std::array<Vertex, 3> v{cand[a], cand[b], cand[c]};
          if (g.adjacent(v[0], v[1]) || g.adjacent(v[0], v[2]) || g.adjacent(v[1], v[2])) {
            ctx.discard(Branch::ThreePartNonFull);
            ctx.discard(Branch::ThreePartFull);
            continue;
          }
          // G': drop the other neighbours of u and, as u is the only T-vertex kept, the rest of T.
          VertexSet gprime = alive - nu - others;
          for (Vertex x : v) gprime.insert(x);

          // Not full: some v_i is a leaf next to u.
          for (std::size_t k = 0; k < 3; ++k) {
            const Vertex lone = v[k];
            const Vertex p = v[(k + 1) % 3];
            const Vertex q = v[(k + 2) % 3];
            VertexSet g1 = gprime - g.neighbourhood(lone);
            g1.erase(u);
            g1.erase(lone);
            auto rest = cut_away(inst, std::move(g1), std::min(p, q), std::max(p, q));
            if (!rest) {
              ctx.discard(Branch::ThreePartNonFull);
              continue;
            }
            rest->insert(u);
            rest->insert(lone);
            keep_better(local, ctx.offer(inst, Branch::ThreePartNonFull, std::move(*rest), u, {v[0], v[1], v[2]}));
          }

          // Full: every survivor other than u sees exactly one v_i.
          VertexSet g2(universe);
          std::array<VertexSet, 3> side{VertexSet(universe), VertexSet(universe), VertexSet(universe)};
          gprime.for_each([&](Vertex x) {
            if (x == u || x == v[0] || x == v[1] || x == v[2]) {
              g2.insert(x);
              return;
            }
            int hits = 0;
            std::size_t which = 0;
            for (std::size_t k = 0; k < 3; ++k)
              if (g.adjacent(x, v[k])) {
                ++hits;
                which = k;
              }
            if (hits == 1) {
              g2.insert(x);
              side[which].insert(x);
            }
          });
          const auto s0 = side[0].to_vector();
          const auto s1 = side[1].to_vector();
          const auto s2 = side[2].to_vector();
          for (Vertex x0 : s0)
            for (Vertex x1 : s1)
              for (Vertex x2 : s2) {
                const std::array<Vertex, 3> x{x0, x1, x2};
                if (g.adjacent(x0, x1) || g.adjacent(x0, x2) || g.adjacent(x1, x2)) {
                  ctx.discard(Branch::ThreePartFull);
                  continue;
                }
                VertexSet f = g2;
                for (std::size_t k = 0; k < 3; ++k)
                  side[k].for_each([&](Vertex y) {
                    if (y == x[k]) return;
                    bool drop = !g.adjacent(y, x[k]);
                    for (std::size_t j = 0; j < 3 && !drop; ++j)
                      if (j != k && g.adjacent(y, x[j])) drop = true;
                    if (drop) f.erase(y);
                  });
                keep_better(local, ctx.offer(inst, Branch::ThreePartFull, std::move(f), u, {v[0], v[1], v[2]}));
              }
        }
    return local;
  });
}

std::optional<Solution> best_le1_part(const Instance& inst, std::optional<Vertex> center) {
  SolveContext ctx;
  return best_le1_part(inst, inst.graph().vertices(), center, ctx);
}

std::optional<Solution> best_2part(const Instance& inst, std::optional<Vertex> center) {
  SolveContext ctx;
  return best_2part(inst, inst.graph().vertices(), center, ctx);
}

std::optional<Solution> best_3part(const Instance& inst) {
  SolveContext ctx;
  return best_3part(inst, inst.graph().vertices(), ctx);
}

}  // namespace sfvs
