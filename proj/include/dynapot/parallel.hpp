#pragma once

// Deterministic task helpers. Work is split into a fixed chunk grid that does
// not depend on the thread count; per-chunk partials are combined serially in
// chunk order, so results are identical for any number of workers.

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace dynapot {

inline unsigned hardware_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// Runs fn(i) for i in [0, n); fn must only write to slots owned by i.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                         unsigned threads = 0) {
  if (n == 0) return;
  unsigned tc = threads ? threads : hardware_threads();
  if (tc <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(tc);
  for (unsigned t = 0; t < tc; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += tc) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

// Chunked sum with a fixed reduction order (serial combine over chunk index).
// chunk_fn(lo, hi) returns the partial over [lo, hi).
inline double parallel_sum(std::size_t n, std::size_t n_chunks,
                           const std::function<double(std::size_t, std::size_t)>& chunk_fn,
                           unsigned threads = 0) {
  if (n == 0) return 0.0;
  if (n_chunks == 0) n_chunks = 1;
  if (n_chunks > n) n_chunks = n;
  std::vector<double> partial(n_chunks, 0.0);
  std::size_t step = (n + n_chunks - 1) / n_chunks;
  parallel_for(n_chunks, [&](std::size_t c) {
    std::size_t lo = c * step;
    std::size_t hi = lo + step < n ? lo + step : n;
    if (lo < hi) partial[c] = chunk_fn(lo, hi);
  }, threads);
  double acc = 0.0;
  for (double p : partial) acc += p;
  return acc;
}

}  // namespace dynapot
