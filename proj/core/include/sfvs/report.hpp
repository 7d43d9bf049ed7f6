#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string_view>
#include <vector>

#include "sfvs/graph.hpp"
#include "sfvs/reduced_solver.hpp"

namespace sfvs {

/// Guess families explored by the solvers.
enum class Branch : std::uint8_t {
  Le1Part,
  TwoPart,
  ThreePartNonFull,
  ThreePartFull,
  CoreIncomplete,
  PairDegreeOne,
  PairDegreeTwo,
  CoreCompleteEnum,
};

inline constexpr std::array kBranches{Branch::Le1Part,        Branch::TwoPart,       Branch::ThreePartNonFull,
                                      Branch::ThreePartFull,  Branch::CoreIncomplete, Branch::PairDegreeOne,
                                      Branch::PairDegreeTwo,  Branch::CoreCompleteEnum};

std::string_view to_string(Branch b);

struct BranchStats {
  std::uint64_t tried = 0;
  std::uint64_t discarded = 0;
  std::uint64_t certified = 0;

  friend bool operator==(const BranchStats&, const BranchStats&) = default;
};

/// Indexed by Branch.
using SolveStats = std::array<BranchStats, kBranches.size()>;

/// A certified candidate, reported while it is being considered.
struct CandidateEvent {
  Branch branch;
  const Solution& solution;
  Vertex center = -1;
  std::vector<Vertex> center_neighbours;
  std::vector<Vertex> core_pair;  // the two T-vertices of a pair branch
};

using CandidateObserver = std::function<void(const CandidateEvent&)>;

struct SolverConfig {
  ReducedSolverConfig reduced;
  int threads = 1;
};

/// Shared by the guess loops of one solve: configuration, counters and the
/// optional observer. Safe to use from worker threads.
class SolveContext {
 public:
  SolveContext() = default;
  explicit SolveContext(SolverConfig config, CandidateObserver observer = {});
  SolveContext(const SolveContext&) = delete;
  SolveContext& operator=(const SolveContext&) = delete;

  const SolverConfig& config() const noexcept { return config_; }

  /// A guess rejected before any candidate was built.
  void discard(Branch b);

  /// Certifies the candidate forest and records the outcome.
  std::optional<Solution> offer(const Instance& inst, Branch b, VertexSet forest, Vertex center = -1,
                                std::vector<Vertex> center_neighbours = {}, std::vector<Vertex> core_pair = {});
  /// Records an already certified solution (or a failed guess when empty).
  std::optional<Solution> record(Branch b, std::optional<Solution> solution, Vertex center = -1,
                                 std::vector<Vertex> center_neighbours = {}, std::vector<Vertex> core_pair = {});

  SolveStats stats() const;

 private:
  struct Counters {
    std::atomic<std::uint64_t> tried{0};
    std::atomic<std::uint64_t> discarded{0};
    std::atomic<std::uint64_t> certified{0};
  };

  SolverConfig config_;
  CandidateObserver observer_;
  std::array<Counters, kBranches.size()> counters_;
  std::mutex observer_mutex_;
};

}  // namespace sfvs
