#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "sfvs/cotree.hpp"
#include "sfvs/graph.hpp"

namespace sfvs {

enum class Backend : std::uint8_t { Dp, Brute, Auto };

Backend parse_backend(std::string_view name);
std::string_view to_string(Backend b);

struct ReducedSolverConfig {
  Backend backend = Backend::Auto;
  int brute_threshold = 24;  // auto: brute force when the graph has at most this many vertices
  int max_modulator = 16;
};

/// Summary of a selected vertex set inside a cograph, enough to decide
/// T-cycles created by later unions and joins.
struct Signature {
  std::uint8_t count = 0;      // 0, 1, or 2 meaning "two or more"
  bool edge = false;           // G[S] has an edge
  bool terminal = false;       // S meets T
  bool terminal_edge = false;  // some edge of G[S] has an endpoint in T

  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature union_signature(const Signature& a, const Signature& b);
/// nullopt when joining the two sides closes a cycle through T.
std::optional<Signature> join_signature(const Signature& a, const Signature& b);

/// The DP feasibility predicate: true iff no join along the cotree rejects
/// the selection. Matches "G[selected] is a T-forest" on cographs.
bool cograph_signature_feasible(const Cotree& cotree, const VertexSet& terminals, const VertexSet& selected);

/// Maximum-weight T-forest among the cotree's vertices; inst.graph() must be
/// realized by the cotree on those vertices. The result is certified.
Solution max_tforest_cograph(const Cotree& cotree, const Instance& inst);

/// A vertex set P and a cotree of the remaining vertices. The decomposition
/// describes the graph G[domain()], where domain() = P + cotree leaves.
struct ModulatorDecomposition {
  VertexSet modulator;
  Cotree cotree;

  VertexSet domain() const { return modulator | cotree.vertices(); }
};

/// Cotree of G[domain - modulator]; nullopt (with the P4 in *p4) if that is not a cograph.
std::optional<ModulatorDecomposition> decompose_with_modulator(const Graph& g, const VertexSet& domain,
                                                               const VertexSet& modulator, InducedP4* p4 = nullptr);

/// Exact maximum-weight T-forest of G[dec.domain()] containing `required`
/// (nullopt when G[required] itself has a T-cycle). Enumerates the kept
/// part of the modulator and runs a component-type DP over the cotree.
/// Throws CapacityError when |P| exceeds max_modulator.
std::optional<Solution> max_tforest_with_modulator(const ModulatorDecomposition& dec, const Instance& inst,
                                                   const VertexSet& required, int max_modulator = 16);

/// Backend switch between the DP and the brute-force oracle.
std::optional<Solution> solve_reduced(const ModulatorDecomposition& dec, const Instance& inst,
                                      const VertexSet& required, const ReducedSolverConfig& config);

}  // namespace sfvs
