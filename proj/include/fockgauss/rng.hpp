#pragma once

// SplitMix64 (Steele, Lea, Flood 2014): 64-bit state advanced by the golden
// gamma 0x9E3779B97F4A7C15, output mixed with the variant-13 finalizer
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   z ^= z >> 31.
// split() draws one output and uses it, mixed once more, as the seed of an
// independent child stream. Experiments give each trial its own child, so
// results do not depend on the order in which trials run.

#include <cstdint>
#include <stdexcept>

namespace fockgauss {

class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t state() const noexcept { return state_; }

  std::uint64_t next() noexcept {
    state_ += kGamma;
    return mix(state_);
  }

  SplitMix64 split() noexcept { return SplitMix64(mix(next() ^ 0xD1B54A32D192ED03ull)); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi], rejection-sampled (no modulo bias).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do r = next();
    while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

}  // namespace fockgauss
