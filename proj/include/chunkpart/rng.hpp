#pragma once

#include <cstdint>

namespace chunkpart {

// 64-bit avalanche finalizer (murmur3 fmix64). The exact bit pattern is part
// of the file-format and partitioner contracts, so do not touch the constants.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

// Counter-based stream: value(seed, c) = mix64(seed + (c+1)*gamma).
// Values depend only on (seed, counter), so streams can be sharded by
// counter range and are reproducible across platforms.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t counter = 0) noexcept
      : seed_(seed), counter_(counter) {}

  static constexpr std::uint64_t value_at(std::uint64_t seed,
                                          std::uint64_t counter) noexcept {
    return mix64(seed + (counter + 1) * kGoldenGamma);
  }

  std::uint64_t next() noexcept { return value_at(seed_, counter_++); }

  // Uniform in [0, bound), bound > 0. Multiply-shift keeps the draw a pure
  // function of the stream value.
  std::uint64_t next_below(std::uint64_t bound) noexcept {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  // Uniform in [0, 1).
  double next_unit() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

}  // namespace chunkpart
