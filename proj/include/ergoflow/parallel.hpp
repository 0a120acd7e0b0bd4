#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace ergoflow {

// Global worker count. 0 means "use hardware_concurrency".
// Results of parallel_for are independent of this value: every task writes
// only to its own index, and chunks are merged in index order.
inline int& parallel_degree() {
  static int degree = 0;
  return degree;
}

inline int effective_degree() {
  int d = parallel_degree();
  if (d <= 0) d = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, d);
}

template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const int workers = effective_degree();
  if (workers == 1 || n < 64) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const std::size_t lo = std::min(n, w * chunk);
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace ergoflow
