#pragma once

#include <cstdint>
#include <vector>

namespace firesched {

// SplitMix64 output function. Counter-based, so seeds for independent
// substreams (fire positions, radii, UAV positions, per-iteration campaigns)
// can be derived without sharing state.
constexpr std::uint64_t split_mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed for substream `stream` of `seed`. Serial and parallel consumers of the
// same (seed, stream) pair see identical draws.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return split_mix64(split_mix64(seed) ^ split_mix64(~stream));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n). Fixed-point multiply keeps this branch-free
  // and platform-independent; the bias is below n / 2^64.
  std::uint64_t uniform_int(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::uint64_t state_;
};

// Substream labels used across the library. Scenario generation draws
// positions and radii from separate streams so a Monte-Carlo campaign can
// redraw radii and UAV positions while keeping the fire layout fixed.
enum : std::uint64_t {
  kStreamFirePositions = 1,
  kStreamFireRadii = 2,
  kStreamUavPositions = 3,
  kStreamGa = 4,
};

}  // namespace firesched
