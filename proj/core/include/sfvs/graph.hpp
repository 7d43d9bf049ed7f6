#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sfvs/rational.hpp"
#include "sfvs/vertex_set.hpp"

namespace sfvs {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 in compressed adjacency form.
/// Neighbour lists are sorted ascending and duplicate-free.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws InputError on out-of-range ids, self-loops or repeated edges.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return neighbours_.size() / 2; }

  std::span<const Vertex> neighbours(Vertex v) const noexcept {
    return {neighbours_.data() + offsets_[static_cast<std::size_t>(v)],
            neighbours_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
  }
  int degree(Vertex v) const noexcept {
    return static_cast<int>(offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)]);
  }
  bool adjacent(Vertex u, Vertex v) const noexcept;

  VertexSet neighbourhood(Vertex v) const;
  VertexSet vertices() const { return VertexSet::full(static_cast<std::size_t>(n_)); }
  /// Edges (u, v) with u < v in ascending order.
  std::vector<Edge> edges() const;

  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> neighbours_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_old;  // new id -> old id, ascending
  std::vector<Vertex> to_new;  // old id -> new id, or -1 if dropped
};

/// G[keep], relabelled to 0..|keep|-1 preserving the order of ids.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Components of G[within] (all of G by default), ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);

/// A graph with terminal set T and strictly positive rational vertex weights.
class Instance {
 public:
  Instance() = default;
  /// Empty weights means unit weights. Throws InputError on invalid data.
  Instance(Graph graph, VertexSet terminals, std::vector<Rational> weights = {});

  const Graph& graph() const noexcept { return graph_; }
  int order() const noexcept { return graph_.order(); }
  const VertexSet& terminals() const noexcept { return terminals_; }
  bool is_terminal(Vertex v) const noexcept { return terminals_.contains(v); }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  const Rational& weight(Vertex v) const { return weights_[static_cast<std::size_t>(v)]; }
  Rational weight_of(const VertexSet& s) const;
  Rational total_weight() const;
  bool has_unit_weights() const;

  const std::optional<Rational>& threshold() const noexcept { return threshold_; }
  void set_threshold(std::optional<Rational> k) { threshold_ = std::move(k); }

  /// The instance restricted to G[keep] with ids remapped.
  std::pair<Instance, InducedSubgraph> restricted(const VertexSet& keep) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Graph graph_;
  VertexSet terminals_;
  std::vector<Rational> weights_;
  std::optional<Rational> threshold_;
};

/// A vertex set F whose induced subgraph is a T-forest, with its weight.
struct Solution {
  VertexSet forest;
  Rational weight;
  bool certified = false;

  VertexSet deleted() const { return forest.complement(); }
};

/// Runs the T-forest checker on G[forest]; returns a certified Solution or nullopt.
std::optional<Solution> certify(const Instance& inst, VertexSet forest);

/// Deterministic preference: larger weight, then lexicographically smaller vertex list.
bool better(const Solution& a, const Solution& b);

/// Replaces best with candidate when the candidate is better (or best is empty).
void keep_better(std::optional<Solution>& best, std::optional<Solution> candidate);

}  // namespace sfvs
