#ifndef STRATHOM_PARALLEL_HPP
#define STRATHOM_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace strathom {

/// Worker cap from STRATHOM_THREADS; defaults to sequential execution.
inline int thread_cap() {
  const char* env = std::getenv("STRATHOM_THREADS");
  if (!env) return 1;
  const int v = std::atoi(env);
  return v < 1 ? 1 : v;
}

/// Runs fn(0..count-1); tasks must touch disjoint state. Results are
/// deterministic regardless of the cap.
template <typename Fn>
void for_each_index(int count, Fn&& fn) {
  const int workers = std::min(thread_cap(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        if (failed) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          failed = true;
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace strathom

#endif
