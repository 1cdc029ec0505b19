#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <utility>
#include <vector>

namespace extremal {

// Worker-count resolution used by the CLI: explicit flag > EXTREMAL_LAB_WORKERS
// env var > 1. Library entry points take an explicit count instead of reading
// the environment themselves.
inline unsigned resolve_workers(unsigned requested) {
  if (requested >= 1) return requested;
  if (const char* env = std::getenv("EXTREMAL_LAB_WORKERS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

// Splits [0, total) into `chunks` contiguous ranges and runs
// fn(chunk_index, begin, end) on them, using up to `workers` threads.
// Callers get determinism by accumulating per-chunk results and merging them
// in chunk order; fn must not touch shared mutable state.
inline void parallel_chunks(std::uint64_t total, unsigned workers, unsigned chunks,
                            const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
  if (total == 0) return;
  if (chunks == 0) chunks = 1;
  if (chunks > total) chunks = static_cast<unsigned>(total);
  auto bounds = [&](unsigned c) {
    std::uint64_t lo = total * c / chunks;
    std::uint64_t hi = total * (c + 1) / chunks;
    return std::pair<std::uint64_t, std::uint64_t>{lo, hi};
  };
  if (workers <= 1 || chunks == 1) {
    for (unsigned c = 0; c < chunks; ++c) {
      auto [lo, hi] = bounds(c);
      fn(c, lo, hi);
    }
    return;
  }
  std::atomic<unsigned> next{0};
  auto worker = [&] {
    for (;;) {
      unsigned c = next.fetch_add(1);
      if (c >= chunks) return;
      auto [lo, hi] = bounds(c);
      fn(c, lo, hi);
    }
  };
  std::vector<std::thread> pool;
  unsigned nthreads = workers < chunks ? workers : chunks;
  pool.reserve(nthreads);
  for (unsigned i = 0; i + 1 < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

inline void parallel_chunks(std::uint64_t total, unsigned workers,
                            const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
  unsigned chunks = workers > 1 ? workers * 8 : 1;
  parallel_chunks(total, workers, chunks, fn);
}

}  // namespace extremal
