#include "sfvs/cotree.hpp"

#include <algorithm>
#include <functional>

#include "sfvs/errors.hpp"

namespace sfvs {

Cotree::Cotree(std::vector<CotreeNode> nodes, int host_order)
    : nodes_(std::move(nodes)), vertices_(static_cast<std::size_t>(host_order)) {
  parent_.assign(nodes_.size(), -1);
  depth_.assign(nodes_.size(), 0);
  leaf_of_.assign(static_cast<std::size_t>(host_order), -1);
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    const auto& nd = nodes_[id];
    if (nd.kind == CotreeKind::Leaf) {
      if (nd.vertex < 0 || nd.vertex >= host_order || vertices_.contains(nd.vertex))
        throw InputError("cotree leaf with invalid or repeated vertex");
      vertices_.insert(nd.vertex);
      leaf_of_[static_cast<std::size_t>(nd.vertex)] = static_cast<int>(id);
      continue;
    }
    if (nd.left < 0 || nd.right < 0 || static_cast<std::size_t>(nd.left) >= id || static_cast<std::size_t>(nd.right) >= id)
      throw InputError("cotree children must precede their parent");
    parent_[static_cast<std::size_t>(nd.left)] = static_cast<int>(id);
    parent_[static_cast<std::size_t>(nd.right)] = static_cast<int>(id);
  }
  for (std::size_t id = nodes_.size(); id-- > 0;)
    if (parent_[id] >= 0) depth_[id] = depth_[static_cast<std::size_t>(parent_[id])] + 1;
}

bool Cotree::joined(Vertex u, Vertex v) const {
  int a = leaf_of_[static_cast<std::size_t>(u)];
  int b = leaf_of_[static_cast<std::size_t>(v)];
  if (a < 0 || b < 0) throw InputError("vertex is not a cotree leaf");
  if (a == b) return false;
  while (depth_[static_cast<std::size_t>(a)] > depth_[static_cast<std::size_t>(b)]) a = parent_[static_cast<std::size_t>(a)];
  while (depth_[static_cast<std::size_t>(b)] > depth_[static_cast<std::size_t>(a)]) b = parent_[static_cast<std::size_t>(b)];
  while (a != b) {
    a = parent_[static_cast<std::size_t>(a)];
    b = parent_[static_cast<std::size_t>(b)];
  }
  return nodes_[static_cast<std::size_t>(a)].kind == CotreeKind::Join;
}

Graph Cotree::to_graph() const {
  std::vector<std::vector<Vertex>> leaves(nodes_.size());
  std::vector<Edge> edges;
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    const auto& nd = nodes_[id];
    if (nd.kind == CotreeKind::Leaf) {
      leaves[id].push_back(nd.vertex);
      continue;
    }
    auto& l = leaves[static_cast<std::size_t>(nd.left)];
    auto& r = leaves[static_cast<std::size_t>(nd.right)];
    if (nd.kind == CotreeKind::Join)
      for (Vertex a : l)
        for (Vertex b : r) edges.emplace_back(std::min(a, b), std::max(a, b));
    leaves[id] = std::move(l);
    leaves[id].insert(leaves[id].end(), r.begin(), r.end());
    r.clear();
  }
  return Graph::from_edges(static_cast<int>(vertices_.universe()), edges);
}

bool Cotree::realizes(const Graph& g) const {
  if (static_cast<std::size_t>(g.order()) != vertices_.universe()) return false;
  const Graph encoded = to_graph();
  bool ok = true;
  vertices_.for_each([&](Vertex v) {
    if (!ok) return;
    std::vector<Vertex> expected;
    for (Vertex w : g.neighbours(v))
      if (vertices_.contains(w)) expected.push_back(w);
    auto got = encoded.neighbours(v);
    ok = std::equal(expected.begin(), expected.end(), got.begin(), got.end());
  });
  return ok;
}

namespace {

// Dense adjacency over the kept vertices, indexed locally.
struct DenseGraph {
  DenseGraph(const Graph& g, const VertexSet& keep) : to_global(keep.to_vector()) {
    const auto k = to_global.size();
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < k; ++i) local[static_cast<std::size_t>(to_global[i])] = static_cast<int>(i);
    rows.assign(k, VertexSet(k));
    for (std::size_t i = 0; i < k; ++i)
      for (Vertex w : g.neighbours(to_global[i]))
        if (local[static_cast<std::size_t>(w)] >= 0) rows[i].insert(local[static_cast<std::size_t>(w)]);
  }
  std::size_t size() const { return to_global.size(); }
  const VertexSet& row(int i) const { return rows[static_cast<std::size_t>(i)]; }
  VertexSet closed(int i) const {
    VertexSet r = row(i);
    r.insert(i);
    return r;
  }

  std::vector<Vertex> to_global;
  std::vector<VertexSet> rows;
};

// Components of G[s] (complement=false) or of its complement, each a set of local ids.
std::vector<VertexSet> dense_components(const DenseGraph& d, const VertexSet& s, bool complement) {
  std::vector<VertexSet> parts;
  VertexSet unvisited = s;
  std::vector<int> stack;
  for (int start = unvisited.first(); start >= 0; start = unvisited.first()) {
    VertexSet part(d.size());
    unvisited.erase(start);
    stack.push_back(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      part.insert(v);
      VertexSet reach = complement ? unvisited - d.row(v) : unvisited & d.row(v);
      reach.for_each([&](int w) { stack.push_back(w); });
      unvisited -= reach;
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

// Induced P4 inside s; s must contain one.
std::optional<InducedP4> dense_find_p4(const DenseGraph& d, const VertexSet& s) {
  std::optional<InducedP4> found;
  s.for_each([&](int a) {
    if (found) return;
    const VertexSet na = d.closed(a) & s;
    (d.row(a) & s).for_each([&](int b) {
      if (found) return;
      const VertexSet nab = na | d.closed(b);
      ((d.row(b) & s) - na).for_each([&](int c) {
        if (found) return;
        const int dd = ((d.row(c) & s) - nab).first();
        if (dd >= 0) found = InducedP4{a, b, c, dd};
      });
    });
  });
  return found;
}

class CotreeBuilder {
 public:
  explicit CotreeBuilder(const DenseGraph& d) : d_(d) {}

  // Returns the node id, or -1 after recording a P4.
  int build(const VertexSet& s) {
    if (s.count() == 1) {
      nodes_.push_back({CotreeKind::Leaf, d_.to_global[static_cast<std::size_t>(s.first())], -1, -1});
      return static_cast<int>(nodes_.size()) - 1;
    }
    auto parts = dense_components(d_, s, false);
    CotreeKind kind = CotreeKind::Union;
    if (parts.size() == 1) {
      parts = dense_components(d_, s, true);
      kind = CotreeKind::Join;
      if (parts.size() == 1) {
        p4_ = dense_find_p4(d_, s);
        return -1;
      }
    }
    int acc = -1;
    for (const auto& part : parts) {
      const int child = build(part);
      if (child < 0) return -1;
      if (acc < 0) {
        acc = child;
      } else {
        nodes_.push_back({kind, -1, acc, child});
        acc = static_cast<int>(nodes_.size()) - 1;
      }
    }
    return acc;
  }

  std::vector<CotreeNode> take_nodes() { return std::move(nodes_); }
  const std::optional<InducedP4>& p4() const { return p4_; }

 private:
  const DenseGraph& d_;
  std::vector<CotreeNode> nodes_;
  std::optional<InducedP4> p4_;
};

}  // namespace

CotreeBuild build_cotree(const Graph& g) { return build_cotree(g, g.vertices()); }

CotreeBuild build_cotree(const Graph& g, const VertexSet& keep) {
  CotreeBuild out;
  const DenseGraph d(g, keep);
  if (d.size() == 0) {
    out.cotree = Cotree({}, g.order());
    return out;
  }
  CotreeBuilder builder(d);
  if (builder.build(VertexSet::full(d.size())) < 0) {
    const auto& p = *builder.p4();
    for (std::size_t i = 0; i < 4; ++i) out.p4[i] = d.to_global[static_cast<std::size_t>(p[i])];
    return out;
  }
  out.cotree = Cotree(builder.take_nodes(), g.order());
  return out;
}

bool is_cograph(const Graph& g, const VertexSet& keep) { return build_cotree(g, keep).ok(); }

namespace {

bool find_independent(const DenseGraph& d, VertexSet candidates, int need, std::vector<int>& chosen) {
  if (need == 0) return true;
  for (int v = candidates.first(); v >= 0; v = candidates.next(v)) {
    if (static_cast<int>(candidates.count()) < need) return false;
    candidates.erase(v);
    chosen.push_back(v);
    if (find_independent(d, candidates - d.row(v), need - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<PatternWitness> find_induced_sp1_p4(const Graph& g, int s) {
  if (s < 0) throw InputError("pattern parameter s must be non-negative");
  if (g.order() < s + 4) return std::nullopt;
  const DenseGraph d(g, g.vertices());
  const auto all = VertexSet::full(d.size());
  std::optional<PatternWitness> found;
  for (int a = 0; a < static_cast<int>(d.size()) && !found; ++a) {
    const VertexSet na = d.closed(a);
    d.row(a).for_each([&](int b) {
      if (found) return;
      const VertexSet nab = na | d.closed(b);
      (d.row(b) - na).for_each([&](int c) {
        if (found) return;
        (d.row(c) - nab).for_each([&](int dd) {
          if (found || dd < a) return;  // each path once up to reversal
          const VertexSet rest = all - (nab | d.closed(c) | d.closed(dd));
          std::vector<int> chosen;
          if (!find_independent(d, rest, s, chosen)) return;
          PatternWitness w;
          w.s = s;
          for (int v : chosen) w.vertices.push_back(d.to_global[static_cast<std::size_t>(v)]);
          for (int v : {a, b, c, dd}) w.vertices.push_back(d.to_global[static_cast<std::size_t>(v)]);
          found = std::move(w);
        });
      });
    });
  }
  return found;
}

bool is_valid_pattern(const Graph& g, const PatternWitness& w) {
  const auto& v = w.vertices;
  if (w.s < 0 || v.size() != static_cast<std::size_t>(w.s) + 4) return false;
  for (Vertex x : v)
    if (x < 0 || x >= g.order()) return false;
  auto expected = [&](std::size_t i, std::size_t j) {
    const auto s = static_cast<std::size_t>(w.s);
    return i >= s && j >= s && (j == i + 1 || i == j + 1);
  };
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) return false;
      if (g.adjacent(v[i], v[j]) != expected(i, j)) return false;
    }
  return true;
}

}  // namespace sfvs
