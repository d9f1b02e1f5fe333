#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace grcohom {

// Worker cap from GRCOHOM_THREADS (default 1: deterministic single-threaded).
inline unsigned thread_cap() {
  if (const char* env = std::getenv("GRCOHOM_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

// Index-space parallel map with a deterministic result layout: fn(i) runs for
// every i in [0, n); chunks are contiguous.
inline void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
  unsigned workers = thread_cap();
  if (workers <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
  std::vector<std::thread> pool;
  size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    size_t lo = w * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace grcohom
