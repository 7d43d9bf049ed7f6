#include "sfvs/reduced_solver.hpp"

#include <string>

#include "sfvs/errors.hpp"
#include "sfvs/oracle.hpp"

namespace sfvs {

std::optional<ModulatorDecomposition> decompose_with_modulator(const Graph& g, const VertexSet& domain,
                                                               const VertexSet& modulator, InducedP4* p4) {
  if (!modulator.is_subset_of(domain)) throw InputError("modulator must lie inside the domain");
  auto built = build_cotree(g, domain - modulator);
  if (!built.ok()) {
    if (p4) *p4 = built.p4;
    return std::nullopt;
  }
  return ModulatorDecomposition{modulator, *std::move(built.cotree)};
}

Backend parse_backend(std::string_view name) {
  if (name == "dp") return Backend::Dp;
  if (name == "brute") return Backend::Brute;
  if (name == "auto") return Backend::Auto;
  throw InputError("unknown backend '" + std::string(name) + "'");
}

std::string_view to_string(Backend b) {
  switch (b) {
    case Backend::Dp:
      return "dp";
    case Backend::Brute:
      return "brute";
    case Backend::Auto:
      break;
  }
  return "auto";
}

std::optional<Solution> solve_reduced(const ModulatorDecomposition& dec, const Instance& inst,
                                      const VertexSet& required, const ReducedSolverConfig& config) {
  const VertexSet domain = dec.domain();
  bool brute = config.backend == Backend::Brute;
  if (config.backend == Backend::Auto) brute = static_cast<int>(domain.count()) <= config.brute_threshold;
  if (brute) return brute_force_max_tforest(inst, domain, required);
  return max_tforest_with_modulator(dec, inst, required, config.max_modulator);
}

}  // namespace sfvs
