#pragma once

#include <cstdint>
#include <optional>

#include "sfvs/cotree.hpp"
#include "sfvs/graph.hpp"
#include "sfvs/report.hpp"

namespace sfvs {

enum class ClassStatus : std::uint8_t { Skipped, Free, Violated };

std::string_view to_string(ClassStatus s);

struct ClassCheck {
  ClassStatus status = ClassStatus::Skipped;
  int s = 2;
  std::optional<PatternWitness> witness;
};

struct SolveOptions {
  SolverConfig config;
  /// Validate (sP1+P4)-freeness; by default only for graphs with at most 40 vertices.
  std::optional<bool> validate_class;
  CandidateObserver observer;
};

struct SolveReport {
  Solution best;
  SolveStats stats{};
  ClassCheck class_check;
  std::optional<bool> decision;  // w(V \ F) <= k, when the instance has a threshold
};

/// Weighted problem; optimal on (2P1+P4)-free graphs, certified always.
SolveReport solve_weighted_2p1p4(const Instance& inst, const SolveOptions& options = {});

/// Unit weights only; optimal on (sP1+P4)-free graphs. The class check uses
/// s as given, the algorithm max(s, 2).
SolveReport solve_unweighted_sp1p4(const Instance& inst, int s, const SolveOptions& options = {});

}  // namespace sfvs
