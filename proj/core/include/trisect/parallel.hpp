#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace trisect {

/// Thread count: TRISECT_THREADS when set, else hardware concurrency.
inline unsigned default_thread_count() {
  if (const char* env = std::getenv("TRISECT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(begin, end) over disjoint chunks of [0, n). Workers share nothing
/// mutable; callers merge per-chunk results afterwards.
inline void parallel_chunks(
    std::uint64_t n, unsigned threads,
    const std::function<void(unsigned chunk, std::uint64_t begin,
                             std::uint64_t end)>& fn) {
  if (threads <= 1 || n < 2 * threads) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::thread> workers;
  const std::uint64_t per = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t b = t * per;
    const std::uint64_t e = std::min(n, b + per);
    if (b >= e) break;
    workers.emplace_back([&fn, t, b, e] { fn(t, b, e); });
  }
  for (auto& w : workers) w.join();
}

}  // namespace trisect
