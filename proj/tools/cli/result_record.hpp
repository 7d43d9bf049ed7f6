#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <sfvs/graph.hpp>
#include <sfvs/pipeline.hpp>

namespace sfvs::cli {

struct RecordOptions {
  std::string mode;  // "weighted" or "unweighted"
  int s = 2;
  std::string backend;
  std::optional<double> elapsed_ms;  // printed only when set
};

/// The solve output: one JSON object, ids 1-based, weights as "num/den".
std::string format_record(const Instance& inst, const SolveReport& report, const RecordOptions& options);

/// The fields of a record that verify inspects; ids converted to 0-based.
struct ParsedRecord {
  int n = 0;
  std::vector<long long> forest;
  std::vector<long long> deleted;
  std::optional<Rational> optimum_weight;
  std::optional<Rational> deleted_weight;
  std::optional<bool> certified;
  std::optional<bool> decision;
};

/// Throws InputError on malformed records.
ParsedRecord parse_record(std::string_view text);

}  // namespace sfvs::cli
