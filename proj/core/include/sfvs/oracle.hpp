#pragma once

#include <functional>
#include <optional>

#include "sfvs/graph.hpp"

namespace sfvs {

inline constexpr int kBruteForceCap = 26;

/// Exhaustive maximum-weight T-forest. Ties go to the lexicographically
/// smallest vertex list. Throws CapacityError above kBruteForceCap vertices.
Solution brute_force_max_tforest(const Instance& inst);

/// Same, with the forest confined to `domain` and containing `required`;
/// nullopt when `required` itself has a T-cycle. The cap applies to |domain|.
std::optional<Solution> brute_force_max_tforest(const Instance& inst, const VertexSet& domain,
                                                const VertexSet& required);

/// Best T-forest F with accept(F). Every T-forest is visited, so `accept`
/// need not be hereditary.
std::optional<Solution> brute_force_best(const Instance& inst, const std::function<bool(const VertexSet&)>& accept);

}  // namespace sfvs
