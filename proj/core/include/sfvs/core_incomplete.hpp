#pragma once

#include <optional>

#include "sfvs/graph.hpp"
#include "sfvs/report.hpp"

namespace sfvs {

/// Vertices of F with at most 2s-1 neighbours in F.
VertexSet core_of(const Graph& g, const VertexSet& forest, int s);

/// True iff the core of F holds an independent set of size s.
bool is_core_incomplete(const Graph& g, const VertexSet& forest, int s);

/// Maximum-weight core-incomplete T-forest for s >= 2, or nullopt if none
/// exists. Exact whenever every reduced instance is a cograph plus modulator,
/// which holds on (sP1+P4)-free graphs; other reduced instances are skipped
/// and counted as discarded.
std::optional<Solution> best_core_incomplete(const Instance& inst, int s, SolveContext& ctx);
std::optional<Solution> best_core_incomplete(const Instance& inst, int s);

}  // namespace sfvs
