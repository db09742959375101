#include "symheat/special_functions.hpp"

#include "symheat/errors.hpp"

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

namespace symheat {

RadialPoint RadialPoint::compact(double theta) {
  if (!(theta >= -M_PI && theta <= M_PI))
    throw std::invalid_argument("RadialPoint: theta must lie in [-pi, pi]");
  return RadialPoint(Kind::Compact, theta);
}

RadialPoint RadialPoint::dual(double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("RadialPoint: r must be nonnegative");
  return RadialPoint(Kind::Dual, r);
}

double RadialPoint::theta() const {
  if (kind_ != Kind::Compact) throw std::logic_error("RadialPoint: not a compact point");
  return value_;
}

double RadialPoint::r() const {
  if (kind_ != Kind::Dual) throw std::logic_error("RadialPoint: not a dual point");
  return value_;
}

double gegenbauer_ratio(double lambda, int k, double x) {
  if (k < 0) throw std::invalid_argument("gegenbauer_ratio: negative degree");
  if (k == 0) return 1.0;
  // run the recurrence at x and at 1 in lockstep
  double prev = 1.0, cur = 2.0 * lambda * x;
  double prev1 = 1.0, cur1 = 2.0 * lambda;
  for (int n = 2; n <= k; ++n) {
    const double a = 2.0 * (n + lambda - 1.0) / n;
    const double b = (n + 2.0 * lambda - 2.0) / n;
    const double next = a * x * cur - b * prev;
    const double next1 = a * cur1 - b * prev1;
    prev = cur;
    cur = next;
    prev1 = cur1;
    cur1 = next1;
  }
  return cur / cur1;
}

namespace {

int rank_one_degree(const SymmetricSpaceModel& model, const SphericalWeight& mu) {
  if (model.rank() != 1 || mu.xi.size() != 1)
    throw capability_error("spherical functions are only implemented for rank-one models");
  return mu.xi[0];
}

double gegenbauer_index(const SymmetricSpaceModel& model) {
  // Sphere(d): (d-1)/2. GroupSU(2) shares the geometry of Sphere(3), and
  // its normalized character sin((k+1)t)/((k+1) sin t) is the lambda = 1
  // Gegenbauer ratio.
  if (model.family() == Family::Sphere) return (model.param() - 1) / 2.0;
  return 1.0;
}

}  // namespace

bool supports_spherical_eval(const SymmetricSpaceModel& model) {
  return model.family() == Family::Sphere ||
         (model.family() == Family::GroupSU && model.param() == 2);
}

bool supports_dual_kernel(const SymmetricSpaceModel& model) {
  return model.rank() == 1 && model.positive_roots().front().multiplicity % 2 == 0;
}

double spherical_eval(const SymmetricSpaceModel& model, const SphericalWeight& mu,
                      double theta) {
  if (!supports_spherical_eval(model))
    throw capability_error("spherical_eval: unsupported model " + model.name());
  const int k = rank_one_degree(model, mu);
  return gegenbauer_ratio(gegenbauer_index(model), k, std::cos(theta));
}

double spherical_eval_holo(const SymmetricSpaceModel& model, const SphericalWeight& mu,
                           double r) {
  if (!supports_spherical_eval(model))
    throw capability_error("spherical_eval_holo: unsupported model " + model.name());
  if (!(r >= 0.0)) throw std::invalid_argument("spherical_eval_holo: r must be nonnegative");
  const int k = rank_one_degree(model, mu);
  return gegenbauer_ratio(gegenbauer_index(model), k, std::cosh(r));
}

namespace {

std::complex<double> sinc_c(std::complex<double> z) {
  if (std::abs(z) < 1e-4) {
    const std::complex<double> z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sin(z) / z;
}

double r_over_sinh(double r) {
  if (r < 1e-8) return 1.0 - r * r / 6.0;
  return r / std::sinh(r);
}

}  // namespace

std::complex<double> dual_spherical(const SymmetricSpaceModel& model,
                                    std::complex<double> lambda, double r) {
  const bool h3 = (model.family() == Family::Sphere && model.param() == 3) ||
                  (model.family() == Family::GroupSU && model.param() == 2);
  if (!h3)
    throw capability_error("dual_spherical: only the H^3 dual of " + std::string("Sphere(3)") +
                           "/GroupSU(2) is implemented, got " + model.name());
  if (!(r >= 0.0)) throw std::invalid_argument("dual_spherical: r must be nonnegative");
  // sin(lambda r)/(lambda sinh r) = sinc(lambda r) * (r / sinh r)
  return sinc_c(lambda * r) * r_over_sinh(r);
}

int dual_descent_order(const SymmetricSpaceModel& model) {
  if (model.rank() != 1)
    throw capability_error("hyperbolic dual kernels are only implemented in rank one");
  const int m_alpha = model.positive_roots().front().multiplicity;
  if (m_alpha % 2 != 0)
    throw capability_error("dual of " + model.name() +
                           " is even dimensional; no closed-form heat kernel here");
  return m_alpha / 2;
}

DualHeatShape::DualHeatShape(int m, double t) : m_(m), t_(t) {
  if (m < 1) throw std::invalid_argument("DualHeatShape: m must be >= 1");
  if (!(t > 0.0)) throw std::invalid_argument("DualHeatShape: t must be positive");
  // phi_0 = 1; phi_{j+1} = csch(r) ((r/2t) phi_j - phi_j'), working in the
  // monomial ring r^a coth^b csch^c with
  //   d/dr r = 1,  d/dr coth = -csch^2,  d/dr csch = -csch coth.
  using Key = std::array<int, 3>;
  std::map<Key, double> phi{{{0, 0, 0}, 1.0}};
  for (int step = 0; step < m; ++step) {
    std::map<Key, double> next;
    auto add = [&next](int a, int b, int c, double coeff) {
      if (coeff != 0.0) next[{a, b, c}] += coeff;
    };
    for (const auto& [key, coeff] : phi) {
      const auto [a, b, c] = key;
      // (r / 2t) phi, then the multiplication by csch
      add(a + 1, b, c + 1, coeff / (2.0 * t));
      // -phi' terms, each multiplied by csch
      if (a > 0) add(a - 1, b, c + 1, -coeff * a);
      add(a, b - 1, c + 3, coeff * b);
      add(a, b + 1, c + 1, coeff * c);
    }
    phi = std::move(next);
  }
  for (const auto& [key, coeff] : phi)
    if (coeff != 0.0) terms_.push_back({key[0], key[1], key[2], coeff});
}

double DualHeatShape::operator()(double r) const {
  if (!(r >= 0.0)) throw std::invalid_argument("DualHeatShape: r must be nonnegative");
  const double gaussian = std::exp(-r * r / (4.0 * t_));
  if (m_ == 1) return gaussian * r_over_sinh(r) / (2.0 * t_);
  const double rr = std::max(r, 1e-7);  // the m >= 2 sums cancel at the origin
  const double coth = 1.0 / std::tanh(rr);
  const double csch = 1.0 / std::sinh(rr);
  double sum = 0.0;
  for (const Term& term : terms_) {
    double v = term.coeff;
    for (int i = 0; i < term.pow_r; ++i) v *= rr;
    for (int i = 0; i < term.pow_coth; ++i) v *= coth;
    for (int i = 0; i < term.pow_csch; ++i) v *= csch;
    sum += v;
  }
  return gaussian * sum;
}

std::complex<double> kernel_eval(const SymmetricSpaceModel& model, double t,
                                 const RadialPoint& p, const Rat& cutoff) {
  if (!(t > 0.0)) throw std::invalid_argument("kernel_eval: t must be positive");
  double sum = 0.0;
  for (const SphericalWeight& w : enumerate_weights(model, cutoff)) {
    const double value = p.kind() == RadialPoint::Kind::Compact
                             ? spherical_eval(model, w, p.theta())
                             : spherical_eval_holo(model, w, p.r());
    sum += static_cast<double>(w.dim) * std::exp(-2.0 * t * to_double(w.casimir)) * value;
  }
  return {sum, 0.0};
}

}  // namespace symheat
