#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace simseq {

/// Resolves a requested worker count; 0 means "all hardware threads".
inline unsigned effective_workers(unsigned requested) {
  if (requested) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [first, last) into a fixed number of chunks that does not depend on
/// the worker count, evaluates chunk(lo, hi) on up to `workers` threads and
/// folds the partial results left to right. With an associative combine the
/// result is identical for every worker count.
template <class Result, class ChunkFn, class Combine>
Result parallel_reduce(std::uint64_t first, std::uint64_t last,
                       unsigned workers, Result init, ChunkFn&& chunk,
                       Combine&& combine, std::uint64_t chunks = 64) {
  if (last <= first) return init;
  const std::uint64_t span = last - first;
  chunks = std::clamp<std::uint64_t>(chunks, 1, span);
  std::vector<Result> partial(chunks, init);
  auto bounds = [&](std::uint64_t c) {
    return first + span / chunks * c + std::min(c, span % chunks);
  };

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
      try {
        partial[c] = chunk(bounds(c), bounds(c + 1));
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = chunks;
      }
    }
  };

  const unsigned w = static_cast<unsigned>(
      std::min<std::uint64_t>(effective_workers(workers), chunks));
  if (w <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(w);
    for (unsigned i = 0; i < w; ++i) pool.emplace_back(worker);
  }

  if (error) std::rethrow_exception(error);

  Result acc = std::move(init);
  for (auto& p : partial) acc = combine(std::move(acc), std::move(p));
  return acc;
}

}  // namespace simseq
