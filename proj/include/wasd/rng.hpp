#pragma once

#include <cstdint>

namespace wasd {

// All randomness in the library flows through splitmix64 (Vigna's finalizer
// with the golden-gamma increment). The generator is frozen: changing any
// constant invalidates shipped suites and golden artifacts.
//
//   splitmix64(z) = mix(z + 0x9E3779B97F4A7C15)
//
// Streams are built by rehashing: stream(seed, tag, i) = splitmix64(
// splitmix64(seed ^ tag) + i). Values in [0,1) come from the top 53 bits.
inline constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t mix2(std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(a) ^ b);
}

inline constexpr std::uint64_t mix3(std::uint64_t a, std::uint64_t b,
                                    std::uint64_t c) {
  return splitmix64(mix2(a, b) ^ splitmix64(c));
}

// Uniform double in [0, 1) from the top 53 bits.
inline constexpr double to_unit01(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Counter-based stream: deterministic, stateless between draws.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t tag = 0)
      : state_(splitmix64(seed ^ tag)) {}

  std::uint64_t next_u64() { return splitmix64(state_ + (counter_++)); }

  double next_unit01() { return to_unit01(next_u64()); }

  // Uniform integer in [0, n). n must be positive; modulo bias is
  // negligible for the small ranges used here (vocab sizes, pool sizes).
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

 private:
  std::uint64_t state_;
  std::uint64_t counter_ = 0;
};

}  // namespace wasd
