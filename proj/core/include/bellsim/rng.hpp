#pragma once

#include <cstdint>
#include <random>

namespace bellsim {

/// SplitMix64 finalizer; good avalanche for seed derivation.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic seed for a substream identified by (master, a, b).
/// Used to give every run/setting its own independent generator so result
/// assembly is order-independent.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a = 0,
                                    std::uint64_t b = 0) {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ mix64(a + 0x632be59bd9b4e019ULL));
  h = mix64(h ^ mix64(b + 0x9e6c63d0876a9a47ULL));
  return h;
}

/// Seeded generator with hand-rolled variate transforms.
///
/// The transforms (inverse CDF, Box-Muller) are spelled out here instead of
/// going through std::*_distribution, whose output is implementation-defined;
/// a given seed must reproduce the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Exponential with the given mean; mean <= 0 collapses to 0.
  double exponential(double mean) {
    if (mean <= 0.0) return 0.0;
    return -mean * std::log1p(-uniform());
  }

  /// Centered Gaussian (Box-Muller); sigma <= 0 collapses to 0.
  double normal(double sigma);

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bellsim
