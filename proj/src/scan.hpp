#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace anonrs::detail {

struct ScanResult {
  std::uint64_t first_hit = std::numeric_limits<std::uint64_t>::max();
  bool found() const { return first_hit != std::numeric_limits<std::uint64_t>::max(); }
};

// Smallest index in [0, size) for which hit(index) is true. Blocks are
// claimed dynamically; every index below the final answer is always tested,
// so the result does not depend on the number of workers.
template <typename Pred>
ScanResult first_hit(std::uint64_t size, int workers, Pred hit) {
  constexpr std::uint64_t kBlock = 64;
  const std::uint64_t blocks = (size + kBlock - 1) / kBlock;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto run = [&] {
    try {
      for (;;) {
        const std::uint64_t b = next.fetch_add(1);
        if (b >= blocks) return;
        const std::uint64_t lo = b * kBlock;
        if (lo >= best.load()) return;
        const std::uint64_t hi = std::min(size, lo + kBlock);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
          if (!hit(idx)) continue;
          std::uint64_t cur = best.load();
          while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
          }
          break;
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next.store(blocks);
    }
  };

  const int n = std::max(1, std::min<int>(workers, static_cast<int>(std::min<std::uint64_t>(blocks, 256))));
  if (n <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < n; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return ScanResult{best.load()};
}

}  // namespace anonrs::detail
