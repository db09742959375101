#pragma once

// Concrete spherical functions on the supported rank-one models, their
// holomorphic continuations to the radial slice exp(i a) . o, the dual
// spherical functions of H^3, and the radial shapes of odd-dimensional
// hyperbolic heat kernels (normalization is calibrated in the quadrature
// module).

#include "symheat/space_models.hpp"
#include "symheat/weight_lattice.hpp"

#include <complex>

namespace symheat {

/// A point on a radial slice: either the compact angle theta (geodesic
/// distance to the base point, canonically in [0, pi]; negative angles are
/// accepted so the evenness of every implemented function is testable) or
/// the dual radius r >= 0 along exp(i r X) . o.
class RadialPoint {
 public:
  enum class Kind { Compact, Dual };

  static RadialPoint compact(double theta);
  static RadialPoint dual(double r);

  Kind kind() const { return kind_; }
  double theta() const;
  double r() const;

 private:
  RadialPoint(Kind kind, double value) : kind_(kind), value_(value) {}
  Kind kind_;
  double value_;
};

/// C_k^lambda(x) / C_k^lambda(1) by the three-term recurrence; stable for
/// the ranges used here (k <= ~60), including x = cosh r >= 1 where all
/// recurrence terms are positive.
double gegenbauer_ratio(double lambda, int k, double x);

/// True for Sphere(d) and GroupSU(2), the models with implemented
/// spherical functions.
bool supports_spherical_eval(const SymmetricSpaceModel& model);

/// True when the model has an odd-dimensional hyperbolic dual (rank one
/// with even root multiplicity).
bool supports_dual_kernel(const SymmetricSpaceModel& model);

/// psi_mu(exp(theta) . o), normalized to 1 at the base point.
/// Sphere(d): Gegenbauer ratio with lambda = (d-1)/2; GroupSU(2): the
/// normalized character sin((k+1)theta)/((k+1) sin theta). Throws
/// capability_error for other models.
double spherical_eval(const SymmetricSpaceModel& model, const SphericalWeight& mu,
                      double theta);

/// Holomorphic continuation theta -> i r: cos theta -> cosh r. Real valued
/// and >= 1 for r >= 0.
double spherical_eval_holo(const SymmetricSpaceModel& model, const SphericalWeight& mu,
                           double r);

/// Spherical function of the noncompact dual H^3 with spectral parameter
/// lambda: sin(lambda r)/(lambda sinh r), with the entire limits at
/// lambda = 0 and r = 0. Supported for Sphere(3) and GroupSU(2).
std::complex<double> dual_spherical(const SymmetricSpaceModel& model,
                                    std::complex<double> lambda, double r);

/// Number of descent steps m for the model's dual H^{2m+1}; throws
/// capability_error when the dual is even dimensional or the model has
/// rank > 1.
int dual_descent_order(const SymmetricSpaceModel& model);

/// Radial shape of the heat kernel on H^{2m+1} at time t, obtained from
/// the Gaussian by m applications of -(1/sinh r) d/dr. The result omits
/// the normalizing constant; see make_dual_heat_kernel in quadrature.hpp
/// for the mass-one calibrated kernel.
class DualHeatShape {
 public:
  DualHeatShape(int m, double t);
  double operator()(double r) const;
  int descent_order() const { return m_; }
  double time() const { return t_; }

 private:
  struct Term {
    int pow_r, pow_coth, pow_csch;
    double coeff;
  };
  int m_;
  double t_;
  std::vector<Term> terms_;
};

/// Truncated kernel series sum_{casimir(mu) <= cutoff} d(mu)
/// e^{-2 t casimir(mu)} psi~_mu(p). The imaginary part is exactly zero;
/// the complex return type keeps the reality claim checkable.
std::complex<double> kernel_eval(const SymmetricSpaceModel& model, double t,
                                 const RadialPoint& p, const Rat& cutoff);

}  // namespace symheat
