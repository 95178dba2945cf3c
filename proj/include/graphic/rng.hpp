#pragma once

#include <cstdint>
#include <random>

namespace graphic {

// SplitMix64 finalizer; used to derive independent sub-streams from
// (seed, tag...) so callers get stable per-entity streams.
constexpr uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

template <class... Tags>
constexpr uint64_t derive_seed(uint64_t seed, Tags... tags) {
  uint64_t h = splitmix64(seed);
  ((h = splitmix64(h ^ static_cast<uint64_t>(tags))), ...);
  return h;
}

// mt19937_64 with hand-rolled bounded draws: the standard pins the engine
// but not the distributions, and outputs here must be reproducible
// byte-for-byte across toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  // Uniform in [0, n). Rejection sampling over the top of the range.
  uint64_t bounded(uint64_t n) {
    if (n <= 1) return 0;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace graphic
