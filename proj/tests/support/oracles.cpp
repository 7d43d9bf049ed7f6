#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace sfvs::testing {

Instance make_instance(int n, std::vector<Edge> edges, std::initializer_list<Vertex> terminals,
                       std::vector<Rational> weights) {
  return Instance(Graph::from_edges(n, edges), VertexSet(static_cast<std::size_t>(n), terminals), std::move(weights));
}

bool naive_t_forest(const Graph& g, const VertexSet& keep, const VertexSet& terminals) {
  const int n = g.order();
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  bool found = false;
  // extend a simple path start -> ... -> v; a cycle closes when v sees start again
  std::function<void(Vertex, Vertex, int)> walk = [&](Vertex start, Vertex v, int length) {
    for (Vertex w : g.neighbours(v)) {
      if (found || !keep.contains(w)) continue;
      if (w == start && length >= 2) {
        found = true;
        return;
      }
      if (on_path[static_cast<std::size_t>(w)]) continue;
      on_path[static_cast<std::size_t>(w)] = 1;
      walk(start, w, length + 1);
      on_path[static_cast<std::size_t>(w)] = 0;
    }
  };
  for (Vertex t = 0; t < n && !found; ++t) {
    if (!keep.contains(t) || !terminals.contains(t)) continue;
    on_path[static_cast<std::size_t>(t)] = 1;
    walk(t, t, 0);
    on_path[static_cast<std::size_t>(t)] = 0;
  }
  return !found;
}

bool separates(const Graph& g, const VertexSet& alive, const VertexSet& cut, Vertex a, Vertex b) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{a};
  seen[static_cast<std::size_t>(a)] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (v == b) return false;
    for (Vertex w : g.neighbours(v))
      if (alive.contains(w) && !cut.contains(w) && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
  }
  return true;
}

Rational brute_min_cut(const Graph& g, const VertexSet& alive, Vertex a, Vertex b, std::span<const Rational> w) {
  std::vector<Vertex> inner;
  alive.for_each([&](Vertex v) {
    if (v != a && v != b) inner.push_back(v);
  });
  std::optional<Rational> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inner.size()); ++mask) {
    VertexSet cut(alive.universe());
    Rational total(0);
    for (std::size_t i = 0; i < inner.size(); ++i)
      if ((mask >> i) & 1) {
        cut.insert(inner[i]);
        total += w[static_cast<std::size_t>(inner[i])];
      }
    if ((!best || total < *best) && separates(g, alive, cut, a, b)) best = total;
  }
  return *best;
}

void for_each_graph(int n, const std::function<void(const Graph&)>& f) {
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1) edges.push_back(slots[i]);
    f(Graph::from_edges(n, edges));
  }
}

namespace {

using Adj = std::vector<std::uint32_t>;

Adj complement(const Adj& a) {
  const auto n = a.size();
  const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
  Adj c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = all & ~a[i] & ~(1u << i);
  return c;
}

Graph to_graph(const Adj& a) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if ((a[i] >> j) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph::from_edges(static_cast<int>(a.size()), edges);
}

}  // namespace

std::vector<Graph> all_cographs(int n) {
  // Unlabelled cographs: a disconnected one is a multiset of connected ones,
  // and a connected one on two or more vertices is the complement of a
  // disconnected one.
  std::vector<std::vector<Adj>> conn(static_cast<std::size_t>(n) + 1);
  std::vector<std::vector<Adj>> disc(static_cast<std::size_t>(n) + 1);
  if (n >= 1) conn[1].push_back(Adj{0});
  for (int size = 2; size <= n; ++size) {
    // parts listed as (part size, index) non-increasing; at least two parts
    std::vector<std::pair<int, std::size_t>> parts;
    std::function<void(int, int, std::size_t)> build = [&](int left, int max_size, std::size_t max_index) {
      if (left == 0) {
        if (parts.size() < 2) return;
        Adj a;
        for (auto [ps, idx] : parts) {
          const Adj& comp = conn[static_cast<std::size_t>(ps)][idx];
          const auto offset = a.size();
          for (auto row : comp) a.push_back(row << offset);
        }
        disc[static_cast<std::size_t>(size)].push_back(std::move(a));
        return;
      }
      for (int ps = std::min(left, max_size); ps >= 1; --ps) {
        const auto& pool = conn[static_cast<std::size_t>(ps)];
        const std::size_t limit = ps == max_size ? max_index : pool.size() - 1;
        for (std::size_t idx = 0; idx <= limit && idx < pool.size(); ++idx) {
          parts.emplace_back(ps, idx);
          build(left - ps, ps, idx);
          parts.pop_back();
        }
      }
    };
    build(size, size, conn[static_cast<std::size_t>(size)].size());  // conn[size] is still empty here
    for (const auto& d : disc[static_cast<std::size_t>(size)]) conn[static_cast<std::size_t>(size)].push_back(complement(d));
  }
  std::vector<Graph> out;
  if (n == 0) return {Graph(0)};
  for (const auto& a : conn[static_cast<std::size_t>(n)]) out.push_back(to_graph(a));
  for (const auto& a : disc[static_cast<std::size_t>(n)]) out.push_back(to_graph(a));
  return out;
}

Instance decorate(Graph g, Rng& rng, double terminal_probability, bool unit_weights) {
  const int n = g.order();
  VertexSet t(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    if (rng.bernoulli(terminal_probability)) t.insert(v);
  std::vector<Rational> w;
  if (!unit_weights)
    for (Vertex v = 0; v < n; ++v) w.emplace_back(rng.uniform(1, 9), rng.uniform(1, 4));
  return Instance(std::move(g), std::move(t), std::move(w));
}

std::pair<Graph, VertexSet> add_modulator(const Graph& g, int k, double p, Rng& rng) {
  const int n = g.order() + k;
  std::vector<Edge> edges = g.edges();
  VertexSet mod(static_cast<std::size_t>(n));
  for (Vertex q = g.order(); q < n; ++q) {
    mod.insert(q);
    for (Vertex v = 0; v < q; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(v, q);
  }
  return {Graph::from_edges(n, edges), mod};
}

bool pairwise_t_forest(const Graph& g, const VertexSet& keep, const VertexSet& terminals) {
  for (Vertex t = 0; t < g.order(); ++t) {
    if (!keep.contains(t) || !terminals.contains(t)) continue;
    VertexSet rest = keep;
    rest.erase(t);
    std::vector<Vertex> nbrs;
    for (Vertex v : g.neighbours(t))
      if (keep.contains(v)) nbrs.push_back(v);
    VertexSet none(keep.universe());
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        if (!separates(g, rest, none, nbrs[i], nbrs[j])) return false;
  }
  return true;
}

Vertex part_center(const Instance& inst, const VertexSet& forest) {
  const VertexSet t = forest & inst.terminals();
  return t.count() == 1 ? t.first() : -1;
}

PartKind part_kind(const Instance& inst, const VertexSet& forest) {
  const VertexSet t = forest & inst.terminals();
  if (t.empty()) return PartKind::Le1;
  if (t.count() > 1) return PartKind::Other;
  int degree = 0;
  for (Vertex v : inst.graph().neighbours(t.first()))
    if (forest.contains(v)) ++degree;
  switch (degree) {
    case 0:
    case 1:
      return PartKind::Le1;
    case 2:
      return PartKind::Two;
    case 3:
      return PartKind::Three;
    default:
      return PartKind::Other;
  }
}

bool naive_core_incomplete(const Graph& g, const VertexSet& forest, int s) {
  std::vector<Vertex> core;
  forest.for_each([&](Vertex v) {
    int degree = 0;
    for (Vertex w : g.neighbours(v))
      if (forest.contains(w)) ++degree;
    if (degree <= 2 * s - 1) core.push_back(v);
  });
  // try every s-subset of the core
  std::vector<Vertex> pick;
  std::function<bool(std::size_t)> search = [&](std::size_t from) {
    if (static_cast<int>(pick.size()) == s) return true;
    for (std::size_t i = from; i < core.size(); ++i) {
      bool ok = true;
      for (Vertex p : pick) ok = ok && !g.adjacent(p, core[i]);
      if (!ok) continue;
      pick.push_back(core[i]);
      if (search(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return search(0);
}

Instance promise_instance(int n, int s, bool unit_weights, Rng& rng) {
  GeneratorSpec spec;
  spec.family = Family::Sp1p4FreeFiltered;
  spec.n = n;
  spec.s = s;
  spec.seed = rng.next();
  spec.unit_weights = unit_weights;
  spec.terminal_probability = 0.2 + 0.5 * rng.unit();
  return generate(spec).instance;
}

namespace {

int forest_degree(const Graph& g, const VertexSet& f, Vertex v) {
  int d = 0;
  for (Vertex w : g.neighbours(v)) d += f.contains(w);
  return d;
}

std::string audit_parts(const Instance& inst, const CandidateEvent& e, std::size_t parts, bool full) {
  const Graph& g = inst.graph();
  const VertexSet& f = e.solution.forest;
  if (e.center < 0 || !f.contains(e.center)) return "center missing from the forest";
  if ((f & inst.terminals()) != VertexSet(f.universe(), {e.center})) return "forest holds another terminal";
  if (e.center_neighbours.size() != parts) return "wrong number of center neighbours";
  if (forest_degree(g, f, e.center) != static_cast<int>(parts)) return "center degree differs from the part count";
  VertexSet center_comp;
  for (const auto& c : connected_components(g, f))
    if (c.contains(e.center)) center_comp = c;
  VertexSet rest = center_comp;
  rest.erase(e.center);
  const auto comps = connected_components(g, rest);
  if (comps.size() != parts) return "center component minus center has " + std::to_string(comps.size()) + " parts";
  for (const auto& c : comps) {
    int hits = 0;
    for (Vertex v : e.center_neighbours) hits += c.contains(v);
    if (hits != 1) return "a part does not hold exactly one center neighbour";
    if (full && !is_clique(g, c)) return "a part of a full candidate is not a clique";
  }
  if (full && center_comp != f) return "full candidate is not connected";
  return {};
}

}  // namespace

std::string audit_candidate(const Instance& inst, const CandidateEvent& e) {
  const Graph& g = inst.graph();
  const VertexSet& f = e.solution.forest;
  switch (e.branch) {
    case Branch::TwoPart:
      return audit_parts(inst, e, 2, false);
    case Branch::ThreePartNonFull:
      return audit_parts(inst, e, 3, false);
    case Branch::ThreePartFull:
      return audit_parts(inst, e, 3, true);
    case Branch::PairDegreeOne:
    case Branch::PairDegreeTwo: {
      if (e.core_pair.size() != 2) return "pair branch without a pair";
      const Vertex a = e.core_pair[0], b = e.core_pair[1];
      if ((f & inst.terminals()) != VertexSet(f.universe(), {a, b})) return "forest terminals differ from the pair";
      if (!g.adjacent(a, b)) return "pair is not adjacent";
      if (forest_degree(g, f, a) > 3 || forest_degree(g, f, b) > 3) return "pair vertex with forest degree above 3";
      return {};
    }
    default:
      return {};
  }
}

}  // namespace sfvs::testing
