#pragma once

#include <optional>
#include <vector>

#include "sfvs/graph.hpp"

namespace sfvs {

/// A cycle (as a vertex sequence, closing edge implied) that contains t_vertex in T.
struct TCycleWitness {
  std::vector<Vertex> cycle;
  Vertex t_vertex = -1;
};

struct TForestResult {
  bool accepted = true;
  std::optional<TCycleWitness> witness;

  explicit operator bool() const noexcept { return accepted; }
};

/// Decides whether f has no cycle through a vertex of T, in O(n+m).
///
/// A T-vertex lies on a cycle exactly when it belongs to a biconnected block
/// with at least three vertices; the blocks come from one low-link traversal.
/// On rejection the witness is a cycle inside such a block.
TForestResult is_t_forest(const Graph& f, const VertexSet& terminals);

/// Same test on the induced subgraph G[keep] without materialising it.
TForestResult is_t_forest(const Graph& g, const VertexSet& keep, const VertexSet& terminals);

/// Quotient of F obtained by contracting each component of F - T to one node.
///
/// Nodes 0..terminals.size()-1 are the T-vertices in ascending order, followed
/// by one node per component of F - T (ordered by smallest vertex). Arcs
/// between a T-vertex and a component carry the number of edges between
/// them, capped at 2.
struct QuotientSketch {
  struct Arc {
    int a = 0;
    int b = 0;
    int multiplicity = 1;
  };

  std::vector<Vertex> terminals;
  std::vector<VertexSet> components;
  std::vector<Arc> arcs;

  int node_count() const noexcept { return static_cast<int>(terminals.size() + components.size()); }
  /// A multi-arc counts as a cycle.
  bool is_acyclic() const;
};

QuotientSketch contract_non_t(const Graph& f, const VertexSet& terminals);
QuotientSketch contract_non_t(const Graph& g, const VertexSet& keep, const VertexSet& terminals);

/// Structural check of a witness against G[keep] and T.
bool is_valid_witness(const Graph& g, const VertexSet& keep, const VertexSet& terminals,
                      const TCycleWitness& witness);

}  // namespace sfvs
