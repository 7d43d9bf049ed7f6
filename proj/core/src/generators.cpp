#include "sfvs/generators.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "sfvs/cotree.hpp"
#include "sfvs/errors.hpp"

namespace sfvs {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kFamilyNames{{
    {Family::RandomGnp, "random_gnp"},
    {Family::RandomCograph, "random_cograph"},
    {Family::CographPlusModulator, "cograph_plus_modulator"},
    {Family::Sp1p4FreeFiltered, "sp1p4_free_filtered"},
    {Family::SplitLike, "split_like"},
    {Family::PaperFig1Like, "paper_fig1_like"},
}};

std::vector<Vertex> permutation(int n, Rng& rng) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = p.size(); i > 1; --i)
    std::swap(p[i - 1], p[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
  return p;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    const Vertex a = perm[static_cast<std::size_t>(u)];
    const Vertex b = perm[static_cast<std::size_t>(v)];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph::from_edges(g.order(), edges);
}

Instance decorate(Graph g, const GeneratorSpec& spec, Rng& rng) {
  const int n = g.order();
  VertexSet terminals(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    if (rng.bernoulli(spec.terminal_probability)) terminals.insert(v);
  std::vector<Rational> weights;
  if (!spec.unit_weights)
    for (Vertex v = 0; v < n; ++v)
      weights.emplace_back(rng.uniform(1, spec.max_numerator), rng.uniform(1, spec.max_denominator));
  return Instance(std::move(g), std::move(terminals), std::move(weights));
}

Graph split_like(int n, double p, Rng& rng) {
  const int clique = (n + 1) / 2;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < clique; ++u)
    for (Vertex v = u + 1; v < clique; ++v) edges.emplace_back(u, v);
  for (Vertex u = 0; u < clique; ++u)
    for (Vertex v = clique; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return relabel(Graph::from_edges(n, edges), permutation(n, rng));
}

// Petersen graph with the edge 0-1 subdivided by vertex 10.
Graph petersen_subdivided() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    if (i != 0) edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  edges.emplace_back(0, 10);
  edges.emplace_back(1, 10);
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  return Graph::from_edges(11, edges);
}

Graph flip_edges(const Graph& g, int flips, Rng& rng) {
  const int n = g.order();
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (auto [u, v] : g.edges()) adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
  for (int i = 0; i < flips && n >= 2; ++i) {
    auto u = static_cast<Vertex>(rng.uniform(0, n - 1));
    auto v = static_cast<Vertex>(rng.uniform(0, n - 2));
    if (v >= u) ++v;
    if (u > v) std::swap(u, v);
    auto& cell = adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    cell = static_cast<char>(!cell);
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InputError("empty random range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  // rejection keeps the draw unbiased and independent of the standard library
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return lo + static_cast<std::int64_t>(x % span);
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

bool Rng::bernoulli(double p) { return unit() < p; }

Family parse_family(std::string_view name) {
  for (auto [f, s] : kFamilyNames)
    if (s == name) return f;
  throw InputError("unknown family '" + std::string(name) + "'");
}

std::string_view to_string(Family f) {
  for (auto [g, s] : kFamilyNames)
    if (g == f) return s;
  return "?";
}

Graph random_gnp(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph random_sparse(int n, std::int64_t m, Rng& rng) {
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (n < 0 || m < 0 || m > pairs) throw InputError("random_sparse: edge count out of range");
  std::unordered_set<std::uint64_t> seen;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (static_cast<std::int64_t>(edges.size()) < m) {
    auto u = static_cast<Vertex>(rng.uniform(0, n - 1));
    auto v = static_cast<Vertex>(rng.uniform(0, n - 1));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (seen.insert(static_cast<std::uint64_t>(u) << 32 | static_cast<std::uint32_t>(v)).second) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph random_cograph(int n, double join_probability, Rng& rng) {
  // Repeatedly merge two random groups by a union or a join.
  std::vector<std::vector<Vertex>> groups;
  for (Vertex v = 0; v < n; ++v) groups.push_back({v});
  std::vector<Edge> edges;
  while (groups.size() > 1) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(groups.size()) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(groups.size()) - 2));
    if (j >= i) ++j;
    if (rng.bernoulli(join_probability))
      for (Vertex a : groups[i])
        for (Vertex b : groups[j]) edges.emplace_back(std::min(a, b), std::max(a, b));
    groups[i].insert(groups[i].end(), groups[j].begin(), groups[j].end());
    groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(j));
  }
  return Graph::from_edges(n, edges);
}

Generated generate(const GeneratorSpec& spec) {
  if (spec.n < 0 || spec.modulator < 0 || spec.s < 0) throw InputError("generator sizes must be non-negative");
  for (double p : {spec.edge_probability, spec.terminal_probability})
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("probabilities must lie in [0, 1]");
  if (!spec.unit_weights && (spec.max_numerator < 1 || spec.max_denominator < 1))
    throw InputError("weight bounds must be positive");
  Rng rng(spec.seed);
  Generated out;
  switch (spec.family) {
    case Family::RandomGnp:
      out.instance = decorate(random_gnp(spec.n, spec.edge_probability, rng), spec, rng);
      break;
    case Family::RandomCograph:
      out.instance = decorate(random_cograph(spec.n, spec.edge_probability, rng), spec, rng);
      break;
    case Family::CographPlusModulator: {
      const int total = spec.n + spec.modulator;
      const Graph base = random_cograph(spec.n, 0.5, rng);
      std::vector<Edge> edges = base.edges();
      for (Vertex q = spec.n; q < total; ++q)
        for (Vertex v = 0; v < q; ++v)
          if (rng.bernoulli(spec.edge_probability)) edges.emplace_back(v, q);
      const auto perm = permutation(total, rng);
      const Graph g = relabel(Graph::from_edges(total, edges), perm);
      VertexSet modulator(static_cast<std::size_t>(total));
      for (Vertex q = spec.n; q < total; ++q) modulator.insert(perm[static_cast<std::size_t>(q)]);
      out.instance = decorate(g, spec, rng);
      out.modulator = std::move(modulator);
      break;
    }
    case Family::Sp1p4FreeFiltered: {
      // Half the draws perturb a cograph, which keeps the acceptance rate workable.
      for (int attempt = 0;; ++attempt) {
        if (attempt >= spec.retry_budget)
          throw GenerationError("no (" + std::to_string(spec.s) + "P1+P4)-free graph within the retry budget");
        Graph g = rng.bernoulli(0.5) ? random_gnp(spec.n, 0.1 + 0.8 * rng.unit(), rng)
                                     : flip_edges(random_cograph(spec.n, 0.5, rng),
                                                  static_cast<int>(rng.uniform(1, 3)), rng);
        if (!find_induced_sp1_p4(g, spec.s)) {
          out.instance = decorate(std::move(g), spec, rng);
          break;
        }
      }
      break;
    }
    case Family::SplitLike:
      out.instance = decorate(split_like(spec.n, spec.edge_probability, rng), spec, rng);
      break;
    case Family::PaperFig1Like: {
      Graph g = petersen_subdivided();
      VertexSet terminals(11);
      for (Vertex t : {0, 3, 7, 10}) terminals.insert(t);
      std::vector<Rational> weights;
      if (!spec.unit_weights)
        for (Vertex v = 0; v < 11; ++v)
          weights.emplace_back(rng.uniform(1, spec.max_numerator), rng.uniform(1, spec.max_denominator));
      out.instance = Instance(std::move(g), std::move(terminals), std::move(weights));
      break;
    }
  }
  return out;
}

}  // namespace sfvs
