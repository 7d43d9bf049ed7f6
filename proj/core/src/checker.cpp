#include "sfvs/checker.hpp"

#include <algorithm>
#include <numeric>

namespace sfvs {

namespace {

constexpr int kUnvisited = -1;

struct DisjointSets {
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
  std::vector<int> parent;
};

// Cycle through t inside a block with at least three vertices.
TCycleWitness extract_witness(const Graph& g, const std::vector<Vertex>& block, Vertex t) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<char> in_block(n, 0);
  for (Vertex v : block) in_block[static_cast<std::size_t>(v)] = 1;

  Vertex a = -1;
  Vertex b = -1;
  for (Vertex w : g.neighbours(t)) {
    if (!in_block[static_cast<std::size_t>(w)]) continue;
    if (a < 0) {
      a = w;
    } else {
      b = w;
      break;
    }
  }

  // BFS from a to b inside block - t.
  std::vector<Vertex> prev(n, kUnvisited);
  std::vector<Vertex> queue{a};
  prev[static_cast<std::size_t>(a)] = a;
  for (std::size_t head = 0; head < queue.size() && prev[static_cast<std::size_t>(b)] == kUnvisited; ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbours(v)) {
      const auto wi = static_cast<std::size_t>(w);
      if (w == t || !in_block[wi] || prev[wi] != kUnvisited) continue;
      prev[wi] = v;
      queue.push_back(w);
    }
  }

  TCycleWitness witness;
  witness.t_vertex = t;
  std::vector<Vertex> path;
  for (Vertex v = b; v != a; v = prev[static_cast<std::size_t>(v)]) path.push_back(v);
  path.push_back(a);
  witness.cycle.push_back(t);
  witness.cycle.insert(witness.cycle.end(), path.rbegin(), path.rend());
  return witness;
}

}  // namespace

TForestResult is_t_forest(const Graph& f, const VertexSet& terminals) {
  return is_t_forest(f, f.vertices(), terminals);
}

TForestResult is_t_forest(const Graph& g, const VertexSet& keep, const VertexSet& terminals) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> disc(n, kUnvisited);
  std::vector<int> low(n, 0);
  std::vector<Vertex> parent(n, -1);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<Vertex> dfs;
  std::vector<Vertex> vstack;
  int timer = 0;

  TForestResult result;
  keep.for_each([&](Vertex root) {
    if (!result.accepted || disc[static_cast<std::size_t>(root)] != kUnvisited) return;
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    dfs.push_back(root);
    vstack.push_back(root);
    while (!dfs.empty()) {
      const Vertex v = dfs.back();
      const auto vi = static_cast<std::size_t>(v);
      auto nbrs = g.neighbours(v);
      if (cursor[vi] < nbrs.size()) {
        const Vertex w = nbrs[cursor[vi]++];
        const auto wi = static_cast<std::size_t>(w);
        if (!keep.contains(w)) continue;
        if (disc[wi] == kUnvisited) {
          parent[wi] = v;
          disc[wi] = low[wi] = timer++;
          dfs.push_back(w);
          vstack.push_back(w);
        } else if (w != parent[vi]) {
          low[vi] = std::min(low[vi], disc[wi]);
        }
        continue;
      }
      dfs.pop_back();
      const Vertex p = parent[vi];
      if (p < 0) {
        vstack.pop_back();
        continue;
      }
      const auto pi = static_cast<std::size_t>(p);
      low[pi] = std::min(low[pi], low[vi]);
      if (low[vi] < disc[pi]) continue;
      // p separates the block containing the tree edge (p, v).
      std::vector<Vertex> block;
      Vertex x;
      do {
        x = vstack.back();
        vstack.pop_back();
        block.push_back(x);
      } while (x != v);
      block.push_back(p);
      if (block.size() < 3) continue;
      for (Vertex b : block) {
        if (terminals.contains(b)) {
          result.accepted = false;
          result.witness = extract_witness(g, block, b);
          dfs.clear();
          vstack.clear();
          return;
        }
      }
    }
  });
  return result;
}

bool QuotientSketch::is_acyclic() const {
  DisjointSets sets(node_count());
  for (const auto& arc : arcs) {
    if (arc.multiplicity > 1) return false;
    if (!sets.unite(arc.a, arc.b)) return false;
  }
  return true;
}

QuotientSketch contract_non_t(const Graph& f, const VertexSet& terminals) {
  return contract_non_t(f, f.vertices(), terminals);
}

QuotientSketch contract_non_t(const Graph& g, const VertexSet& keep, const VertexSet& terminals) {
  const auto n = static_cast<std::size_t>(g.order());
  QuotientSketch sketch;
  const VertexSet kept_terminals = keep & terminals;
  sketch.terminals = kept_terminals.to_vector();
  sketch.components = connected_components(g, keep - terminals);

  std::vector<int> node_of(n, -1);
  for (std::size_t i = 0; i < sketch.terminals.size(); ++i)
    node_of[static_cast<std::size_t>(sketch.terminals[i])] = static_cast<int>(i);
  const int offset = static_cast<int>(sketch.terminals.size());
  for (std::size_t c = 0; c < sketch.components.size(); ++c)
    sketch.components[c].for_each([&](Vertex v) { node_of[static_cast<std::size_t>(v)] = offset + static_cast<int>(c); });

  std::vector<int> hits(sketch.components.size(), 0);
  std::vector<int> touched;
  for (std::size_t i = 0; i < sketch.terminals.size(); ++i) {
    const Vertex t = sketch.terminals[i];
    for (Vertex w : g.neighbours(t)) {
      if (!keep.contains(w)) continue;
      if (terminals.contains(w)) {
        if (t < w) sketch.arcs.push_back({static_cast<int>(i), node_of[static_cast<std::size_t>(w)], 1});
        continue;
      }
      const int c = node_of[static_cast<std::size_t>(w)] - offset;
      if (hits[static_cast<std::size_t>(c)]++ == 0) touched.push_back(c);
    }
    for (int c : touched) {
      sketch.arcs.push_back({static_cast<int>(i), offset + c, std::min(hits[static_cast<std::size_t>(c)], 2)});
      hits[static_cast<std::size_t>(c)] = 0;
    }
    touched.clear();
  }
  return sketch;
}

bool is_valid_witness(const Graph& g, const VertexSet& keep, const VertexSet& terminals,
                      const TCycleWitness& witness) {
  const auto& c = witness.cycle;
  if (c.size() < 3) return false;
  if (!terminals.contains(witness.t_vertex) || std::find(c.begin(), c.end(), witness.t_vertex) == c.end())
    return false;
  std::vector<Vertex> sorted = c;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] >= g.order() || !keep.contains(c[i])) return false;
    if (!g.adjacent(c[i], c[(i + 1) % c.size()])) return false;
  }
  return true;
}

}  // namespace sfvs
