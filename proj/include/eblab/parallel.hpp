#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace eblab {

/// Number of hardware threads, at least 1.
unsigned available_workers() noexcept;

/// Runs `task(i)` for i in [0, count) on up to `workers` threads. Each task
/// returns a std::vector<T>; the results are concatenated in index order, so
/// the output does not depend on the worker count. The first exception
/// thrown by any task is rethrown after all threads join.
template <class T, class Task>
std::vector<T> parallel_collect(std::size_t count, unsigned workers, Task task) {
  std::vector<std::vector<T>> slots(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto run = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        slots[i] = task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(std::max(workers, 1U), count));
  if (threads <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<T> out;
  for (auto& slot : slots) {
    out.insert(out.end(), std::make_move_iterator(slot.begin()),
               std::make_move_iterator(slot.end()));
  }
  return out;
}

}  // namespace eblab
