#pragma once

#include <optional>
#include <span>

#include "sfvs/graph.hpp"

namespace sfvs {

/// Minimum-weight vertex separator problem between two non-adjacent terminals.
///
/// Only vertices in `alive` take part (all vertices when unset); the weights
/// of the terminals are ignored.
struct CutInstance {
  const Graph& graph;
  Vertex source;
  Vertex sink;
  std::span<const Rational> weights;
  std::optional<VertexSet> alive;
};

struct CutResult {
  VertexSet cut;
  Rational weight;
};

/// Minimum-weight set of non-terminal vertices whose removal disconnects
/// source from sink. Throws InfeasibleError when the terminals coincide or
/// are adjacent, InputError when a terminal is not alive or a weight is not
/// positive.
CutResult min_weight_vertex_cut(const CutInstance& inst);

}  // namespace sfvs
