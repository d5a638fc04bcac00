#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace softcp {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Seeded random stream with fixed draw algorithms. The standard
/// distributions are implementation-defined, so all bounded/real/normal
/// draws are spelled out here; two builds with the same seed produce the
/// same byte-identical sequence everywhere.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Independent per-sample stream derived from (master seed, index).
  static RandomStream for_sample(std::uint64_t master_seed, std::uint64_t index) {
    return RandomStream(derive_seed(master_seed, index));
  }

  static std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) {
    return splitmix64(splitmix64(master_seed) ^ splitmix64(index + 0x51ed2701ull));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Unbiased integer in [0, n); n must be at least 1.
  std::uint64_t uniform_index(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  /// Signed integer in [lo, hi], inclusive.
  long uniform_int(long lo, long hi) {
    return lo + static_cast<long>(uniform_index(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Real in [lo, hi).
  double uniform_real(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

  /// Standard normal via Box-Muller (the second variate is discarded so
  /// the draw count stays fixed).
  double normal() {
    const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = uniform_index(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace softcp
