#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sfvs::cli {

struct BenchCase {
  std::string name;
  int n = 0;
  std::int64_t m = 0;
  double ms = 0;
};

std::vector<std::string> bench_suite_names();

/// nullopt for an unknown suite name.
std::optional<std::vector<BenchCase>> run_bench_suite(const std::string& name, std::uint64_t seed);

}  // namespace sfvs::cli
