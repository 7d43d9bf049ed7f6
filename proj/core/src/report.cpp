#include "sfvs/report.hpp"

namespace sfvs {

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::Le1Part:
      return "le1_part";
    case Branch::TwoPart:
      return "two_part";
    case Branch::ThreePartNonFull:
      return "three_part_nonfull";
    case Branch::ThreePartFull:
      return "three_part_full";
    case Branch::CoreIncomplete:
      return "core_incomplete";
    case Branch::PairDegreeOne:
      return "pair_degree_one";
    case Branch::PairDegreeTwo:
      return "pair_degree_two";
    case Branch::CoreCompleteEnum:
      break;
  }
  return "core_complete_enum";
}

SolveContext::SolveContext(SolverConfig config, CandidateObserver observer)
    : config_(config), observer_(std::move(observer)) {}

void SolveContext::discard(Branch b) {
  auto& c = counters_[static_cast<std::size_t>(b)];
  ++c.tried;
  ++c.discarded;
}

std::optional<Solution> SolveContext::offer(const Instance& inst, Branch b, VertexSet forest, Vertex center,
                                            std::vector<Vertex> center_neighbours, std::vector<Vertex> core_pair) {
  return record(b, certify(inst, std::move(forest)), center, std::move(center_neighbours), std::move(core_pair));
}

std::optional<Solution> SolveContext::record(Branch b, std::optional<Solution> solution, Vertex center,
                                             std::vector<Vertex> center_neighbours, std::vector<Vertex> core_pair) {
  auto& c = counters_[static_cast<std::size_t>(b)];
  ++c.tried;
  if (!solution) {
    ++c.discarded;
    return solution;
  }
  ++c.certified;
  if (observer_) {
    std::lock_guard lock(observer_mutex_);
    observer_(CandidateEvent{b, *solution, center, std::move(center_neighbours), std::move(core_pair)});
  }
  return solution;
}

SolveStats SolveContext::stats() const {
  SolveStats out;
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = {counters_[i].tried.load(), counters_[i].discarded.load(), counters_[i].certified.load()};
  return out;
}

}  // namespace sfvs
