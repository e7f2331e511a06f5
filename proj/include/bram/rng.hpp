#pragma once

#include <cstdint>
#include <random>

namespace bram {

/// Seeded generator wrapper. mt19937_64 is fully specified by the standard,
/// and the derived draws below avoid std::uniform_*_distribution, whose
/// output is implementation-defined. Same seed, same stream, everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform in [0, n), unbiased via rejection.
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      std::uint64_t x = eng_();
      if (x >= threshold) return x % n;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return double(eng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace bram
