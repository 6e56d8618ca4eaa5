#pragma once

#include <cstdint>

#include "spinpair/rotor.hpp"

namespace spinpair {

/**
 * Deterministic per-trial generator (splitmix64). Streams depend only on
 * (seed, trial), never on call order across trials or on the platform's
 * distribution implementations, so sweep output is reproducible byte for byte
 * and trials can run in parallel.
 */
class TrialRng {
public:
  explicit TrialRng(std::uint64_t seed, std::uint64_t trial = 0)
      : state_(seed + 0x9E3779B97F4A7C15ULL * (trial + 1)) {
    next();
    next();
  }

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // [0, n)
  int uniform_int(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  int random_sign() { return (next() & 1u) ? 1 : -1; }

  Vec3 unit_vector() {
    const double z = uniform(-1.0, 1.0);
    const double phi = 2.0 * kPi * uniform();
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {s * std::cos(phi), s * std::sin(phi), z};
  }

  // Haar-uniform on SU(2) (Shoemake's subgroup algorithm).
  Rotor random_rotor() {
    const double u1 = uniform();
    const double a = 2.0 * kPi * uniform();
    const double b = 2.0 * kPi * uniform();
    const double r1 = std::sqrt(1.0 - u1);
    const double r2 = std::sqrt(u1);
    return Rotor{r2 * std::cos(b), r1 * std::sin(a), r1 * std::cos(a),
                 r2 * std::sin(b)};
  }

private:
  std::uint64_t state_;
};

}  // namespace spinpair
