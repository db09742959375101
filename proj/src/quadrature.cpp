#include "symheat/quadrature.hpp"

#include "symheat/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <stdexcept>

namespace symheat {

namespace {

constexpr double kGaussianFloor = 1e-18;

void check_spec(const QuadratureSpec& spec) {
  if (spec.panels < 8) throw std::invalid_argument("QuadratureSpec: panels must be >= 8");
  if (!(spec.radial_cutoff > 0.0))
    throw std::invalid_argument("QuadratureSpec: radial_cutoff must be positive");
  if (!(spec.target_tol > 0.0))
    throw std::invalid_argument("QuadratureSpec: target_tol must be positive");
}

double integrate_interval(const std::function<double(double)>& f, double a, double b,
                          const QuadratureSpec& spec) {
  if (spec.scheme == QuadratureSpec::Scheme::TanhSinh) {
    const auto levels = static_cast<std::size_t>(std::ceil(std::log2(spec.panels))) + 2;
    boost::math::quadrature::tanh_sinh<double> integrator(levels);
    return integrator.integrate(f, a, b, spec.target_tol);
  }
  using rule = boost::math::quadrature::gauss<double, 15>;
  const double h = (b - a) / spec.panels;
  double sum = 0.0;
  for (int p = 0; p < spec.panels; ++p) sum += rule::integrate(f, a + p * h, a + (p + 1) * h);
  return sum;
}

/// Radial coordinates scale each root by its length; rank one only.
std::vector<std::pair<double, int>> radial_root_data(const SymmetricSpaceModel& model,
                                                     const char* caller) {
  if (model.rank() != 1)
    throw capability_error(std::string(caller) + ": radial reduction needs a rank-one model, " +
                           model.name() + " has rank " + std::to_string(model.rank()));
  std::vector<std::pair<double, int>> out;
  for (const auto& root : model.positive_roots())
    out.emplace_back(std::sqrt(to_double(gram_inner(model.gram(), root.coords, root.coords))),
                     root.multiplicity);
  return out;
}

}  // namespace

QuadratureSpec default_quadrature(std::optional<double> kernel_time) {
  QuadratureSpec spec;
  if (kernel_time) {
    const double s = *kernel_time;
    spec.radial_cutoff = std::max(10.0, 8.0 * std::sqrt(s) * std::log(10.0) + 5.0);
  }
  return spec;
}

double integrate_radial_compact(const SymmetricSpaceModel& model,
                                const std::function<double(double)>& f,
                                const QuadratureSpec& spec) {
  check_spec(spec);
  const auto roots = radial_root_data(model, "integrate_radial_compact");
  auto density = [&roots](double theta) {
    double d = 1.0;
    for (const auto& [len, mult] : roots)
      for (int i = 0; i < mult; ++i) d *= std::sin(len * theta);
    return std::abs(d);
  };
  const double mass = integrate_interval(density, 0.0, M_PI, spec);
  auto weighted = [&](double theta) { return f(theta) * density(theta); };
  return integrate_interval(weighted, 0.0, M_PI, spec) / mass;
}

double integrate_radial_dual(const SymmetricSpaceModel& model,
                             const std::function<double(double)>& f,
                             const QuadratureSpec& spec, std::optional<double> kernel_time) {
  check_spec(spec);
  if (kernel_time) {
    const double gaussian = std::exp(-spec.radial_cutoff * spec.radial_cutoff /
                                     (4.0 * *kernel_time));
    if (gaussian > kGaussianFloor)
      throw std::invalid_argument(
          "integrate_radial_dual: radial_cutoff " + std::to_string(spec.radial_cutoff) +
          " leaves the heat Gaussian at " + std::to_string(gaussian) + " > 1e-18");
  }
  const auto roots = radial_root_data(model, "integrate_radial_dual");
  auto weighted = [&](double r) {
    double d = 1.0;
    for (const auto& [len, mult] : roots)
      for (int i = 0; i < mult; ++i) d *= std::sinh(len * r);
    return f(r) * d;
  };
  return integrate_interval(weighted, 0.0, spec.radial_cutoff, spec);
}

DualHeatKernel::DualHeatKernel(const SymmetricSpaceModel& model, double t,
                               const QuadratureSpec& spec)
    : shape_(dual_descent_order(model), t), constant_(1.0) {
  const double mass =
      integrate_radial_dual(model, [this](double r) { return shape_(r); }, spec, t);
  if (!(mass > 0.0)) throw std::runtime_error("DualHeatKernel: nonpositive mass");
  constant_ = 1.0 / mass;
}

double dual_heat_kernel(const SymmetricSpaceModel& model, double t, const RadialPoint& p) {
  const DualHeatKernel kernel(model, t, default_quadrature(t));
  return kernel(p.r());
}

namespace {

nlohmann::ordered_json spec_to_json(const QuadratureSpec& spec) {
  nlohmann::ordered_json j;
  j["scheme"] =
      spec.scheme == QuadratureSpec::Scheme::GaussLegendre ? "gauss_legendre" : "tanh_sinh";
  j["panels"] = spec.panels;
  j["radial_cutoff"] = spec.radial_cutoff;
  j["target_tol"] = spec.target_tol;
  return j;
}

}  // namespace

VerificationReport verify_fock_inner(const SymmetricSpaceModel& model,
                                     const SphericalWeight& mu, double t,
                                     const QuadratureSpec& spec, double tolerance) {
  if (!(t > 0.0)) throw std::invalid_argument("verify_fock_inner: t must be positive");
  const DualHeatKernel kernel(model, 2.0 * t, spec);
  const double d = static_cast<double>(mu.dim);
  const double integral = integrate_radial_dual(
      model,
      [&](double r) { return spherical_eval_holo(model, mu, r) * kernel(r); }, spec,
      2.0 * t);
  const double computed = integral / d;
  const double reference = std::exp(2.0 * t * to_double(mu.casimir)) / d;
  VerificationReport rep =
      VerificationReport::make("fock_inner_radial", model.name(), computed, reference,
                               tolerance);
  rep.params["weight"] = mu.xi;
  rep.params["t"] = t;
  rep.quadrature = spec_to_json(spec);
  rep.quadrature["calibration_constant"] = kernel.calibration_constant();
  return rep;
}

VerificationReport verify_heat_identity(const SymmetricSpaceModel& model, double lambda,
                                        double t, const QuadratureSpec& spec,
                                        double tolerance) {
  if (!(t > 0.0)) throw std::invalid_argument("verify_heat_identity: t must be positive");
  const DualHeatKernel kernel(model, 2.0 * t, spec);
  const double computed = integrate_radial_dual(
      model,
      [&](double r) {
        return kernel(r) * dual_spherical(model, std::complex<double>(-lambda, 0.0), r).real();
      },
      spec, 2.0 * t);
  const double rho2 = to_double(gram_inner(model.gram(), model.rho(), model.rho()));
  const double reference = std::exp(-2.0 * t * (lambda * lambda + rho2));
  VerificationReport rep = VerificationReport::make("heat_spherical_integral",
                                                    model.name(), computed, reference,
                                                    tolerance);
  rep.params["lambda"] = lambda;
  rep.params["t"] = t;
  rep.quadrature = spec_to_json(spec);
  rep.quadrature["calibration_constant"] = kernel.calibration_constant();
  return rep;
}

VerificationReport verify_plancherel(const SymmetricSpaceModel& model,
                                     const std::function<double(double)>& f,
                                     const Rat& cutoff, const QuadratureSpec& spec,
                                     double tolerance) {
  const std::vector<SphericalWeight> weights = enumerate_weights(model, cutoff);
  double sum = 0.0;
  double tail = 0.0;
  for (const SphericalWeight& w : weights) {
    const double coeff = integrate_radial_compact(
        model, [&](double theta) { return f(theta) * spherical_eval(model, w, theta); },
        spec);
    tail = static_cast<double>(w.dim) * coeff * coeff;  // last value survives the loop
    sum += tail;
  }
  const double norm2 =
      integrate_radial_compact(model, [&](double theta) { return f(theta) * f(theta); }, spec);
  VerificationReport rep = VerificationReport::make("spherical_plancherel",
                                                    model.name(), sum, norm2, tolerance);
  rep.params["cutoff"] = to_double(cutoff);
  rep.params["weights_used"] = weights.size();
  rep.quadrature = spec_to_json(spec);
  rep.quadrature["truncation_tail_estimate"] = tail;
  return rep;
}

}  // namespace symheat
