#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "sfvs/graph.hpp"

namespace sfvs {

/// Runs fn(i) for i in [0, count) on up to `threads` workers. The first
/// exception thrown by any call is rethrown once all workers are done.
template <typename Fn>
void parallel_for(int threads, std::size_t count, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = count;
          }
        }
      });
  }
  if (error) std::rethrow_exception(error);
}

/// Best of per-task results, reduced in task order so the outcome does not
/// depend on scheduling.
template <typename Fn>
std::optional<Solution> parallel_best(int threads, std::size_t count, Fn&& fn) {
  std::vector<std::optional<Solution>> results(count);
  parallel_for(threads, count, [&](std::size_t i) { results[i] = fn(i); });
  std::optional<Solution> best;
  for (auto& r : results) keep_better(best, std::move(r));
  return best;
}

}  // namespace sfvs
