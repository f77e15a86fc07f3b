#pragma once

#include <cstdint>
#include <random>

namespace linklab {

/// Derive an independent RNG substream from (seed, tags...).
/// Uses splitmix64-style mixing so adjacent seeds and tags decorrelate.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t tag0 = 0,
                                std::uint64_t tag1 = 0) {
  std::uint64_t s = mix_seed(seed);
  s = mix_seed(s ^ mix_seed(tag0));
  s = mix_seed(s ^ mix_seed(tag1));
  return std::mt19937_64(s);
}

}  // namespace linklab
