#pragma once

#include <cstdint>

namespace wlnash {

// Counter-based stream: the k-th draw of a stream is a pure function of
// (seed, k), so every matrix entry can be sampled independently of order.
// The mixing function is the SplitMix64 finalizer.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t bits(std::uint64_t counter) const {
    return mix(key_ + counter * 0x9e3779b97f4a7c15ULL);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  /// Bernoulli(p) draw; p == 0 never fires, p == 1 always fires.
  bool bernoulli(std::uint64_t counter, double p) const { return uniform(counter) < p; }

  /// Independent child stream, used for the sprinkling layer and per-trial seeds.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t tag) {
    return mix(mix(seed) ^ mix(tag + 0x3c6ef372fe94f82bULL));
  }

 private:
  std::uint64_t key_;
};

}  // namespace wlnash
