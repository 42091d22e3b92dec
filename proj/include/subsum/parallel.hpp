#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "subsum/types.hpp"

namespace subsum {

/// Runs task(i) for every i in [0, count) on up to `threads` workers.
/// Tasks are claimed in index order; the first exception thrown by any task
/// is rethrown on the calling thread after all workers stop.
template <typename Task>
void parallel_for(std::size_t count, std::size_t threads, Task&& task) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      if (failed.load(std::memory_order_relaxed)) return;
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads - 1);
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);
}

/// Half-open rank interval.
struct RankRange {
  Count begin = 0;
  Count end = 0;
};

/// Splits [0, total) into contiguous ranges, at most `pieces` of them,
/// none empty. The split depends only on (total, pieces).
inline std::vector<RankRange> split_ranks(Count total, std::size_t pieces) {
  std::vector<RankRange> out;
  if (total == 0) return out;
  const Count p = std::max<Count>(1, std::min<Count>(pieces, total));
  out.reserve(p);
  for (Count i = 0; i < p; ++i) {
    const Count b = static_cast<Count>(static_cast<unsigned __int128>(total) * i / p);
    const Count e = static_cast<Count>(static_cast<unsigned __int128>(total) * (i + 1) / p);
    out.push_back({b, e});
  }
  return out;
}

inline std::size_t default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace subsum
