#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "sfvs/graph.hpp"

namespace sfvs {

enum class Family : std::uint8_t {
  RandomGnp,
  RandomCograph,
  CographPlusModulator,
  Sp1p4FreeFiltered,
  SplitLike,
  PaperFig1Like,
};

Family parse_family(std::string_view name);
std::string_view to_string(Family f);

struct GeneratorSpec {
  Family family = Family::RandomGnp;
  int n = 10;                  // for cograph_plus_modulator: size of the cograph part
  std::uint64_t seed = 1;
  double edge_probability = 0.5;
  int modulator = 0;           // cograph_plus_modulator
  int s = 2;                   // sp1p4_free_filtered
  double terminal_probability = 0.3;
  bool unit_weights = true;
  int max_numerator = 9;       // random weights num/den with num, den drawn uniformly
  int max_denominator = 4;
  int retry_budget = 20000;
};

struct Generated {
  Instance instance;
  std::optional<VertexSet> modulator;  // cograph_plus_modulator only
};

/// Deterministic for a fixed spec on every platform.
Generated generate(const GeneratorSpec& spec);

/// Seeded helpers shared by the generators and the test suites.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool bernoulli(double p);
  double unit();

 private:
  std::mt19937_64 engine_;
};

Graph random_gnp(int n, double p, Rng& rng);
Graph random_cograph(int n, double join_probability, Rng& rng);
/// Exactly m distinct random edges; meant for large sparse graphs.
Graph random_sparse(int n, std::int64_t m, Rng& rng);

}  // namespace sfvs
