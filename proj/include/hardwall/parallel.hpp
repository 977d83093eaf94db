#ifndef HARDWALL_PARALLEL_HPP
#define HARDWALL_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace hardwall {

// Runs body(i) for i in [0, n) on `threads` workers (0 = hardware
// concurrency). The first exception, by lowest index, is rethrown on the
// caller thread; results must be written into caller-owned slots by index so
// reductions stay deterministic.
inline void parallel_for(std::size_t n, unsigned threads,
                         const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads == 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
          failed.store(true, std::memory_order_relaxed);
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failed.load()) {
    for (std::size_t i = 0; i < n; ++i)
      if (errors[i]) std::rethrow_exception(errors[i]);
  }
}

}  // namespace hardwall

#endif
