#ifndef BERNMEAN_RNG_HPP
#define BERNMEAN_RNG_HPP

#include <cstdint>
#include <random>

namespace bernmean {

/// Algorithm identifier recorded in coverage reports; runs are reproducible
/// bit-for-bit across platforms given (seed, stream).
inline constexpr const char* kRngAlgorithm = "splitmix64-stream/mt19937_64/u53";

/// splitmix64 step (Steele, Lea, Flood 2014), used to derive stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seedable generator with independent streams: stream i mixes (seed, i)
/// through splitmix64 before seeding the mt19937_64 engine. Uniform doubles
/// take the top 53 bits, so sequences are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t s = seed ^ (0xD1B54A32D192ED03ULL * (stream + 1));
    engine_.seed(splitmix64(s));
  }

  std::uint64_t next_u64() { return engine_(); }

  double uniform01() { return double(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Integer in [lo, hi] by modulo reduction; bias is negligible for the
  /// small ranges used here.
  int uniform_int(int lo, int hi) {
    const std::uint64_t range = std::uint64_t(hi - lo) + 1;
    return lo + int(engine_() % range);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bernmean

#endif  // BERNMEAN_RNG_HPP
