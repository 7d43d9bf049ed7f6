#include "sfvs/graph.hpp"

#include <algorithm>
#include <string>

#include "sfvs/checker.hpp"
#include "sfvs/errors.hpp"

namespace sfvs {

Graph::Graph(int n) : n_(n), offsets_(static_cast<std::size_t>(n) + 1, 0) {
  if (n < 0) throw InputError("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  std::vector<std::size_t> deg(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  for (std::size_t v = 0; v < deg.size(); ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.neighbours_.resize(g.offsets_.back());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.neighbours_[fill[static_cast<std::size_t>(u)]++] = v;
    g.neighbours_[fill[static_cast<std::size_t>(v)]++] = u;
  }
  for (std::size_t v = 0; v < deg.size(); ++v) {
    auto first = g.neighbours_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.neighbours_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last)
      throw InputError("repeated edge at vertex " + std::to_string(v));
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw InputError("vertex id " + std::to_string(v) + " out of range");
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
  auto nu = neighbours(u);
  auto nv = neighbours(v);
  if (nv.size() < nu.size()) return std::binary_search(nv.begin(), nv.end(), u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

VertexSet Graph::neighbourhood(Vertex v) const {
  return VertexSet(static_cast<std::size_t>(n_), neighbours(v));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbours(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.universe() != static_cast<std::size_t>(g.order()))
    throw InputError("vertex subset does not match the graph");
  InducedSubgraph out;
  out.to_new.assign(static_cast<std::size_t>(g.order()), -1);
  keep.for_each([&](Vertex v) {
    out.to_new[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.to_old.size());
    out.to_old.push_back(v);
  });
  std::vector<Edge> edges;
  for (Vertex u : out.to_old)
    for (Vertex v : g.neighbours(u))
      if (u < v && keep.contains(v))
        edges.emplace_back(out.to_new[static_cast<std::size_t>(u)], out.to_new[static_cast<std::size_t>(v)]);
  out.graph = Graph::from_edges(static_cast<int>(out.to_old.size()), edges);
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.vertices());
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<VertexSet> parts;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack;
  within.for_each([&](Vertex s) {
    if (seen[static_cast<std::size_t>(s)]) return;
    VertexSet part(n);
    seen[static_cast<std::size_t>(s)] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      part.insert(v);
      for (Vertex w : g.neighbours(v)) {
        if (!seen[static_cast<std::size_t>(w)] && within.contains(w)) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    parts.push_back(std::move(part));
  });
  return parts;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (!ok) return;
    for (Vertex w : g.neighbours(v))
      if (s.contains(w)) {
        ok = false;
        return;
      }
  });
  return ok;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  const auto members = s.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!g.adjacent(members[i], members[j])) return false;
  return true;
}

Instance::Instance(Graph graph, VertexSet terminals, std::vector<Rational> weights)
    : graph_(std::move(graph)), terminals_(std::move(terminals)), weights_(std::move(weights)) {
  const auto n = static_cast<std::size_t>(graph_.order());
  if (terminals_.universe() != n) throw InputError("terminal set does not match the graph");
  if (weights_.empty()) weights_.assign(n, Rational(1));
  if (weights_.size() != n) throw InputError("weight vector does not match the graph");
  for (std::size_t v = 0; v < n; ++v)
    if (!weights_[v].is_positive())
      throw InputError("weight of vertex " + std::to_string(v) + " must be positive");
}

Rational Instance::weight_of(const VertexSet& s) const {
  mpq_class total = 0;
  s.for_each([&](Vertex v) { total += weights_[static_cast<std::size_t>(v)].value(); });
  return Rational(std::move(total));
}

Rational Instance::total_weight() const { return weight_of(graph_.vertices()); }

bool Instance::has_unit_weights() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const Rational& w) { return w == Rational(1); });
}

std::pair<Instance, InducedSubgraph> Instance::restricted(const VertexSet& keep) const {
  InducedSubgraph sub = induced_subgraph(graph_, keep);
  VertexSet t(sub.to_old.size());
  std::vector<Rational> w;
  w.reserve(sub.to_old.size());
  for (std::size_t i = 0; i < sub.to_old.size(); ++i) {
    if (terminals_.contains(sub.to_old[i])) t.insert(static_cast<Vertex>(i));
    w.push_back(weights_[static_cast<std::size_t>(sub.to_old[i])]);
  }
  Instance inst(sub.graph, std::move(t), std::move(w));
  return {std::move(inst), std::move(sub)};
}

std::optional<Solution> certify(const Instance& inst, VertexSet forest) {
  if (!is_t_forest(inst.graph(), forest, inst.terminals()).accepted) return std::nullopt;
  Solution s;
  s.weight = inst.weight_of(forest);
  s.forest = std::move(forest);
  s.certified = true;
  return s;
}

bool better(const Solution& a, const Solution& b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  return lex_less(a.forest, b.forest);
}

void keep_better(std::optional<Solution>& best, std::optional<Solution> candidate) {
  if (!candidate) return;
  if (!best || better(*candidate, *best)) best = std::move(candidate);
}

}  // namespace sfvs
