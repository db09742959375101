#pragma once

// Radial quadrature on the compact slice and on the noncompact dual, plus
// the verification drivers that compare quadrature values against the
// closed forms. These integrals are the independent route: they evaluate
// actual function values and never consult the coefficient-space
// identities they are used to check.

#include "symheat/report.hpp"
#include "symheat/space_models.hpp"
#include "symheat/special_functions.hpp"
#include "symheat/weight_lattice.hpp"

#include <functional>
#include <optional>

namespace symheat {

struct QuadratureSpec {
  enum class Scheme { GaussLegendre, TanhSinh };
  Scheme scheme = Scheme::GaussLegendre;
  int panels = 256;
  double radial_cutoff = 10.0;  // for integrals over [0, infinity)
  double target_tol = 1e-8;
};

/// Default spec; when a heat kernel h_s appears in the integrand, pass s
/// so the cutoff satisfies the Gaussian-decay requirement.
QuadratureSpec default_quadrature(std::optional<double> kernel_time = std::nullopt);

/// Normalized zonal integral over the compact model:
/// c ∫_0^pi f(theta) prod_alpha sin^{m_alpha}(alpha(theta)) dtheta with c
/// fixed by f == 1 -> 1. Rank-one models only.
double integrate_radial_compact(const SymmetricSpaceModel& model,
                                const std::function<double(double)>& f,
                                const QuadratureSpec& spec);

/// ∫_0^cutoff f(r) J_1(r) dr with the KAK density J_1(r) =
/// prod_alpha sinh^{m_alpha}(alpha(r)). When `kernel_time` s is given, the
/// Gaussian factor e^{-r^2/4s} must be below 1e-18 at the cutoff;
/// violations raise std::invalid_argument.
double integrate_radial_dual(const SymmetricSpaceModel& model,
                             const std::function<double(double)>& f,
                             const QuadratureSpec& spec,
                             std::optional<double> kernel_time = std::nullopt);

/// Heat kernel on the dual H^{2m+1}, calibrated once per (model, t) so its
/// total mass against J_1 is one. The calibration constant is recorded by
/// the verification drivers.
class DualHeatKernel {
 public:
  DualHeatKernel(const SymmetricSpaceModel& model, double t, const QuadratureSpec& spec);
  double operator()(double r) const { return constant_ * shape_(r); }
  double calibration_constant() const { return constant_; }
  double time() const { return shape_.time(); }

 private:
  DualHeatShape shape_;
  double constant_;
};

/// One-shot evaluation of the calibrated dual heat kernel.
double dual_heat_kernel(const SymmetricSpaceModel& model, double t, const RadialPoint& p);

/// Fock inner product route: <psi~_mu, psi~_mu>_t reduced to
/// the radial integral (1/d) ∫ psi~_mu h_{2t} J_1 dr, compared against
/// e^{2 t casimir(mu)} / d(mu).
VerificationReport verify_fock_inner(const SymmetricSpaceModel& model,
                                     const SphericalWeight& mu, double t,
                                     const QuadratureSpec& spec, double tolerance = 1e-5);

/// Spherical Plancherel: Fourier coefficients of a zonal f by quadrature,
/// then sum d(mu) |f^(mu)|^2 against ∫ |f|^2.
VerificationReport verify_plancherel(const SymmetricSpaceModel& model,
                                     const std::function<double(double)>& f,
                                     const Rat& cutoff, const QuadratureSpec& spec,
                                     double tolerance = 1e-4);

/// Dual heat integral route: ∫ h_{2t} phi_{-lambda} J_1 dr against
/// e^{-2t (lambda^2 + rho^2)}, for real lambda on the H^3 duals.
VerificationReport verify_heat_identity(const SymmetricSpaceModel& model, double lambda,
                                        double t, const QuadratureSpec& spec,
                                        double tolerance = 1e-6);

}  // namespace symheat
