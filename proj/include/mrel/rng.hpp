#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "mrel/scalar.hpp"

namespace mrel {

/// Seeded generator. Draws go through fixed bit-level mappings rather than
/// std:: distributions so sequences are identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [lo, hi].
  long int_in(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  /// p/q with |p| ≤ num_max, 1 ≤ q ≤ den_max.
  Rational rational(long num_max = 20, long den_max = 12) {
    Rational q(int_in(-num_max, num_max), int_in(1, den_max));
    q.canonicalize();
    return q;
  }

  /// Random rational in exact mode, uniform double in [−range, range] in float mode.
  template <Scalar S>
  S scalar(double range = 2.0) {
    if constexpr (is_exact_v<S>) {
      return rational();
    } else {
      return uniform(-range, range);
    }
  }

private:
  std::mt19937_64 engine_;
};

/// FNV-1a mix of a base seed and a stream label, for independent per-suite streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&h](std::uint8_t byte) {
    h ^= byte;
    h *= 1099511628211ULL;
  };
  for (int k = 0; k < 8; ++k) feed(static_cast<std::uint8_t>(seed >> (8 * k)));
  for (char ch : stream) feed(static_cast<std::uint8_t>(ch));
  return h;
}

}  // namespace mrel
