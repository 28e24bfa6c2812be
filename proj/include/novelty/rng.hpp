#pragma once

#include <cstdint>
#include <random>

namespace novelty {

/// SplitMix64 finalizer (Stafford variant 13). A bijection on 64-bit words.
constexpr std::uint64_t fmix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

/// Seed of story `story_index`'s private stream:
///   fmix64(fmix64(master_seed) + 0x9E3779B97F4A7C15 * (story_index + 1)).
constexpr std::uint64_t mix_seed(std::uint64_t master_seed, std::uint64_t story_index) noexcept {
  return fmix64(fmix64(master_seed) + 0x9E3779B97F4A7C15ULL * (story_index + 1));
}

/// Single-owner random stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; all transforms below are our own so the
/// variates do not depend on the standard library implementation.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

  /// Standard normal via the Marsaglia polar method (pairs are cached).
  double normal();

  /// Gamma(shape, scale) via Marsaglia-Tsang (2000) squeeze; shape < 1 uses
  /// the boost Gamma(shape + 1) * U^(1/shape).
  double gamma(double shape, double scale);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace novelty
