#pragma once

// Deterministic fan-out over independent jobs: results are stored by job
// index, so output order never depends on scheduling.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace svlie {

/// Worker cap from SVLIE_THREADS (a positive integer); otherwise the hardware
/// concurrency. Always at least 1.
inline unsigned thread_budget() {
  if (const char *env = std::getenv("SVLIE_THREADS")) {
    try {
      std::size_t used = 0;
      long v = std::stol(env, &used);
      if (used == std::string(env).size() && v > 0) return static_cast<unsigned>(std::min<long>(v, 256));
    } catch (const std::exception &) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// out[i] = fn(i) for i < n. The first exception thrown by a job is rethrown.
template <class R, class Fn> std::vector<R> parallel_map(std::size_t n, Fn &&fn) {
  std::vector<R> out(n);
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_budget(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto &t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

} // namespace svlie
