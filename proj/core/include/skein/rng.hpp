#pragma once

#include <cstdint>

namespace skein {

// Small deterministic PRNG (splitmix64). Used instead of <random> engines so
// that seeded runs produce byte-identical output on every platform and
// standard library. Every randomized entry point takes an explicit seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform over [lo, hi] inclusive. Requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return lo + static_cast<std::int64_t>(v % span);
  }

  bool coin() { return (next() & 1) != 0; }

  // Derives an independent stream; used to split one user-facing seed into
  // per-trial / per-generator streams without correlation.
  Rng split(std::uint64_t salt) {
    Rng child(state_ ^ (0x632be59bd9b4e019ULL * (salt + 1)));
    child.next();
    return child;
  }

 private:
  std::uint64_t state_;
};

}  // namespace skein
