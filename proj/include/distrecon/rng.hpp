// rng.hpp - splitmix64 generator and the bounded draws built on it.
//
// Every random choice in the library goes through this generator so a
// (parameters, seed) pair pins the output bit-for-bit.

#ifndef DISTRECON_RNG_HPP
#define DISTRECON_RNG_HPP

#include <cstdint>
#include <limits>

namespace distrecon {

class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound). Rejects the low 2^64 mod bound outputs so
  /// that the remaining range is a whole multiple of bound.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = (*this)();
      if (x >= threshold) return x % bound;
    }
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double unit() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Seed for trial `trial_index` of a sweep started from `base_seed`.
constexpr std::uint64_t derive_trial_seed(std::uint64_t base_seed, std::uint64_t trial_index) noexcept {
  return base_seed ^ ((trial_index + 1) * 0x9E3779B97F4A7C15ULL);
}

}  // namespace distrecon

#endif  // DISTRECON_RNG_HPP
