#pragma once

#include <cstdint>

namespace extremal {

// Counter-based splitmix64 stream. Output i of stream (seed, stream) is a
// pure function of (seed, stream, i), so any draw can be replayed on any
// platform and sub-streams can be forked without sharing state. This is what
// makes "identical seed => identical output regardless of worker count"
// cheap: each parallel unit forks its own stream by index.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed + 0x9E3779B97F4A7C15ull * (stream + 1))), counter_(0) {}

  std::uint64_t next() { return mix(key_ + 0x9E3779B97F4A7C15ull * ++counter_); }

  // Uniform in [0, bound), bias-free via rejection. bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t v = next();
      if (v >= threshold) return v % bound;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  // Independent child stream; deterministic in (parent seed/stream, tag).
  CounterRng fork(std::uint64_t tag) const {
    CounterRng child(0);
    child.key_ = mix(key_ ^ mix(tag + 0x632BE59BD9B4E019ull));
    child.counter_ = 0;
    return child;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_;
};

}  // namespace extremal
