#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace curv2k::detail {

// Runs body(k) for k in [lo, hi), split into contiguous chunks over at most
// eight threads when the range is large. body must only write to slot k of
// its output, so the result is independent of the split. The first exception
// thrown by any worker is rethrown after all workers joined.
template <typename Body>
void parallel_for(std::size_t lo, std::size_t hi, Body&& body, std::size_t min_parallel = 64) {
  if (hi <= lo) return;
  const std::size_t count = hi - lo;
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = count >= min_parallel ? std::min<std::size_t>(hw, 8) : 1;
  if (workers <= 1) {
    for (std::size_t k = lo; k < hi; ++k) body(k);
    return;
  }
  std::exception_ptr first_error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t a = lo + w * chunk;
      const std::size_t b = std::min(hi, a + chunk);
      if (a >= b) break;
      pool.emplace_back([&, a, b] {
        try {
          for (std::size_t k = a; k < b; ++k) body(k);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      });
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace curv2k::detail
