#pragma once

#include <optional>

#include "sfvs/graph.hpp"
#include "sfvs/report.hpp"

namespace sfvs {

/// Solutions with at most one T-vertex u (the center) whose degree in F is
/// at most 1, exactly 2, or exactly 3. Candidates are confined to `alive`
/// and always certified; nullopt when no guess survives.
///
/// With a fixed center, only candidates containing that center are built.

std::optional<Solution> best_le1_part(const Instance& inst, const VertexSet& alive, std::optional<Vertex> center,
                                      SolveContext& ctx);
std::optional<Solution> best_2part(const Instance& inst, const VertexSet& alive, std::optional<Vertex> center,
                                   SolveContext& ctx);
/// Optimal on (2P1+P4)-free graphs.
std::optional<Solution> best_3part(const Instance& inst, const VertexSet& alive, SolveContext& ctx);

std::optional<Solution> best_le1_part(const Instance& inst, std::optional<Vertex> center = std::nullopt);
std::optional<Solution> best_2part(const Instance& inst, std::optional<Vertex> center = std::nullopt);
std::optional<Solution> best_3part(const Instance& inst);

}  // namespace sfvs
