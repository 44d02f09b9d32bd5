#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "msn/rational.hpp"

namespace msn {

/// SplitMix64 (Steele, Lea & Flood; the java.util.SplittableRandom mixer).
/// Fixed published constants; every seeded computation in this project draws
/// from one of these streams, so results are reproducible bit-for-bit.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Stream id = hash(master seed, purpose tag, index). Derived streams are
/// independent of evaluation order, so trials can run in any order (or in
/// parallel) without changing results.
inline SplitMix64 substream(std::uint64_t master_seed, std::string_view tag,
                            std::uint64_t index) {
  SplitMix64 mixer{master_seed ^ fnv1a64(tag)};
  std::uint64_t a = mixer.next();
  mixer.state = a + index;
  return SplitMix64{mixer.next()};
}

/// Dyadic rational k / 2^53 with k uniform in [0, 2^53).
inline Rational uniform_dyadic(SplitMix64& gen) {
  std::uint64_t k = gen.next() >> 11;
  return Rational(BigInt(k), BigInt(1) << 53);
}

/// Uniform integer in [0, bound) via 128-bit multiply-shift.
inline std::uint64_t uniform_below(SplitMix64& gen, std::uint64_t bound) {
  unsigned __int128 wide = static_cast<unsigned __int128>(gen.next()) * bound;
  return static_cast<std::uint64_t>(wide >> 64);
}

template <typename T>
void shuffle(std::vector<T>& items, SplitMix64& gen) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_below(gen, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace msn
