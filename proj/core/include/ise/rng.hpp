#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ise {

// Deterministic RNG wrapper. Uniform doubles are derived from the raw engine
// output instead of std::uniform_real_distribution so draw sequences are
// reproducible independent of the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n) {
    std::uint64_t x = static_cast<std::uint64_t>(uniform() * static_cast<double>(n));
    return x < n ? x : n - 1;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Derives a per-stage seed from the single user seed, so pipeline stages get
// decorrelated but reproducible streams.
std::uint64_t split_seed(std::uint64_t seed, std::string_view tag);

}  // namespace ise
