#include "symheat/heat_transform.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace symheat {

namespace {

CoefficientVector scale_by_heat(const SymmetricSpaceModel& model, double t,
                                const CoefficientVector& a, bool invert) {
  CoefficientVector out;
  out.mode = a.mode;
  for (const auto& [xi, block] : a.entries) {
    const SphericalWeight w = make_weight(model, xi);
    const double exponent = t * to_double(w.casimir);
    if (invert && exponent > 600.0) {
      std::ostringstream os;
      os << "heat_invert: unbounded inverse at weight [";
      for (std::size_t i = 0; i < xi.size(); ++i) os << (i ? "," : "") << xi[i];
      os << "] (t * casimir = " << exponent << ")";
      throw std::overflow_error(os.str());
    }
    const double factor = std::exp(invert ? exponent : -exponent);
    Block scaled(block.size());
    for (std::size_t i = 0; i < block.size(); ++i) scaled[i] = factor * block[i];
    out.entries[xi] = std::move(scaled);
  }
  return out;
}

}  // namespace

CoefficientVector heat_apply(const SymmetricSpaceModel& model, double t,
                             const CoefficientVector& a) {
  if (!(t > 0.0)) throw std::invalid_argument("heat_apply: t must be positive");
  return scale_by_heat(model, t, a, false);
}

CoefficientVector heat_invert(const SymmetricSpaceModel& model, double t,
                              const CoefficientVector& b) {
  if (!(t > 0.0)) throw std::invalid_argument("heat_invert: t must be positive");
  return scale_by_heat(model, t, b, true);
}

CoefficientVector kernel_coefficients(const SymmetricSpaceModel& model, double t,
                                      const Rat& casimir_cutoff) {
  if (!(t > 0.0)) throw std::invalid_argument("kernel_coefficients: t must be positive");
  CoefficientVector out;
  out.mode = Mode::KInvariant;
  for (const SphericalWeight& w : enumerate_weights(model, casimir_cutoff)) {
    const double c = static_cast<double>(w.dim) * std::exp(-2.0 * t * to_double(w.casimir));
    out.set_scalar(w.xi, Complex{c, 0.0});
  }
  return out;
}

}  // namespace symheat
