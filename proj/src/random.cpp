#include "symheat/random.hpp"

namespace symheat {

CoefficientVector random_coefficients(Rng& rng, Mode mode,
                                      const std::vector<SphericalWeight>& support) {
  CoefficientVector v;
  v.mode = mode;
  for (const SphericalWeight& w : support) {
    const std::size_t len = mode == Mode::Full ? static_cast<std::size_t>(w.dim) : 1;
    Block block(len);
    for (auto& c : block) c = rng.unit_disc();
    v.entries[w.xi] = std::move(block);
  }
  return v;
}

}  // namespace symheat
