#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace gravicat::detail {

/// Runs fn(k) for k in [0, n_chunks) on up to `workers` threads. Callers
/// store chunk results by index, so processing order never affects the
/// combined output.
template <typename Fn>
void run_chunks(int n_chunks, int workers, Fn&& fn) {
  workers = std::clamp(workers, 1, n_chunks);
  if (workers == 1) {
    for (int k = 0; k < n_chunks; ++k) fn(k);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k = next.fetch_add(1); k < n_chunks; k = next.fetch_add(1)) fn(k);
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace gravicat::detail
