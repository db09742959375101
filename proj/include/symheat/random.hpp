#pragma once

// Seedable random coefficient vectors for the property checks. The [0,1)
// conversion is done by hand so that a seed produces the same stream on
// every platform.

#include "symheat/coefficient_spaces.hpp"
#include "symheat/weight_lattice.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace symheat {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on the closed unit disc.
  Complex unit_disc() {
    const double radius = std::sqrt(uniform());
    const double angle = 2.0 * M_PI * uniform();
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

  /// Derives an independent deterministic stream (per suite, per worker).
  Rng fork(std::uint64_t salt) const {
    // splitmix64 over (seed, salt)
    std::uint64_t z = seed_ + salt + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Finitely supported vector over the given weights with every block
/// component drawn from the unit disc.
CoefficientVector random_coefficients(Rng& rng, Mode mode,
                                      const std::vector<SphericalWeight>& support);

}  // namespace symheat
