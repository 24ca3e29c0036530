#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace kpos {

/// SplitMix64 (Steele, Lea, Flood 2014). The constants are fixed forever so
/// that sampled streams are reproducible bit for bit:
///   state += 0x9E3779B97F4A7C15
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z ^= z >> 31
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Seed of the stream for trial `index` under `master`. Depends only on the
/// pair, so trials may run in any order or on any thread.
constexpr std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index) noexcept {
  SplitMix64 a(master);
  const std::uint64_t m = a.next();
  SplitMix64 b(index ^ 0xD1B54A32D192ED03ULL);
  return m ^ b.next();
}

/// Uniform and Gaussian variates on top of SplitMix64. Gaussians use the
/// Box-Muller transform so the stream does not depend on the standard
/// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept : gen_(seed) {}
  static Rng for_trial(std::uint64_t master, std::uint64_t index) noexcept {
    return Rng(derive_stream_seed(master, index));
  }

  std::uint64_t next_u64() noexcept { return gen_.next(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(gen_.next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, bound), bound > 0 (rejection, unbiased).
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v = gen_.next();
    while (v >= limit) v = gen_.next();
    return v % bound;
  }

  double normal() noexcept {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(th);
    has_spare_ = true;
    return r * std::cos(th);
  }

 private:
  SplitMix64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace kpos
