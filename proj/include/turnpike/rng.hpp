#pragma once

#include <cstdint>

#include "turnpike/types.hpp"

namespace turnpike {

// SplitMix64 (Steele, Lea & Flood 2014). State advances by the golden-ratio
// increment and the output is finalized with two xorshift-multiplies. Small,
// fully specified, and byte-identical on every platform, which is what makes
// seeded runs reproducible bit-for-bit. Reference outputs from seed 0:
//   0xe220a8397b1dcdaf, 0x6e789e6aa1b965f4, 0x06c45d188009454f.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double low, double high) {
    return low + (high - low) * next_double();
  }

 private:
  std::uint64_t state_;
};

// Fills row by row (agent-major), one draw per entry.
Matrix uniform_matrix(SplitMix64& rng, Index rows, Index cols, double low, double high);

}  // namespace turnpike
