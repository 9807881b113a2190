#pragma once

#include <cstdint>

namespace macc {

// splitmix64: small, seedable, identical output on every platform. Used for
// synthetic file bytes and demand shuffles so runs are reproducible.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, bound). Modulo bias is irrelevant at the sizes
  // used here and keeps the sequence platform-stable.
  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }
};

}  // namespace macc
