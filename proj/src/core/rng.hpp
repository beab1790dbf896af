#pragma once

#include <cstdint>
#include <random>

namespace korient {

// splitmix64 finalizer; good enough as a cheap 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// Independent sub-seed for (stream, index) under one master seed, so trials
// could run concurrently without sharing generator state.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                    std::uint64_t index) {
  constexpr std::uint64_t phi = 0x9e3779b97f4a7c15ULL;  // 2^64 / golden ratio
  return mix64(mix64(master + phi * (stream + 1)) + phi * (index + 1));
}

// mt19937_64 plus rejection-sampled bounded draws. The raw engine output is
// pinned by the standard, so a fixed seed reproduces byte-identical results
// across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound), bound >= 1. Unbiased: rejects the short cycle.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in (0, 1]; never returns 0, so log() is safe.
  double unit_positive() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

// Binomial(trials, p) sampled by geometric skips between successes; cost is
// proportional to the sampled count, not to `trials`. The trial count is a
// long double because k-subset universes overflow 64 bits for large n.
std::uint64_t sample_binomial(Rng& rng, long double trials, double p);

}  // namespace korient
