#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace leo {

/// Deterministic pseudo-random stream. All distributions are implemented by
/// hand on top of mt19937_64 so that a given seed produces the same draw
/// sequence on every platform (the standard pins the engine but not the
/// library distributions).
///
/// A stream is single-owner: never share one between concurrent tasks.
/// Fork independent streams with mix_seed instead.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform real in [lo, hi). Degenerate intervals (lo == hi) return lo.
  double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }

  /// Uniform real in [0, 1) with 53-bit resolution.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal draw (Box-Muller, pairs cached).
  double normal();

  /// Uniform integer in [0, n). Unbiased via rejection sampling.
  std::size_t uniform_index(std::size_t n);

  bool bernoulli(double p) { return unit() < p; }

  /// Unbiased Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = uniform_index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Derives the seed for repetition `index` from a master seed. splitmix64
/// finalizer over master + (index+1)*golden-gamma; documented so any single
/// repetition can be reproduced in isolation.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

}  // namespace leo
