#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symheat/errors.hpp"
#include "symheat/special_functions.hpp"

#include "support/oracles.hpp"

#include <cmath>

using namespace symheat;
using doctest::Approx;

TEST_CASE("radial points validate their ranges") {
  CHECK_NOTHROW(RadialPoint::compact(0.0));
  CHECK_NOTHROW(RadialPoint::compact(-2.0));
  CHECK_THROWS_AS(RadialPoint::compact(4.0), std::invalid_argument);
  CHECK_THROWS_AS(RadialPoint::dual(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(RadialPoint::dual(1.0).theta(), std::logic_error);
}

TEST_CASE("spherical function examples") {
  const auto s2 = build_model(Family::Sphere, 2);
  const auto su2 = build_model(Family::GroupSU, 2);

  const auto zero = make_weight(s2, {0});
  for (double theta : {0.0, 0.4, 1.7, 3.1}) CHECK(spherical_eval(s2, zero, theta) == 1.0);

  const auto one = make_weight(s2, {1});
  for (double theta : {0.0, 0.3, 1.2, 2.9})
    CHECK(spherical_eval(s2, one, theta) == Approx(std::cos(theta)).epsilon(1e-14));

  const auto k1 = make_weight(su2, {1});
  CHECK(spherical_eval(su2, k1, M_PI / 2) == Approx(0.0).scale(1.0));  // sin(pi)/(2 sin(pi/2))

  CHECK_THROWS_AS(spherical_eval(build_model(Family::GroupSU, 3),
                                 make_weight(build_model(Family::GroupSU, 3), {1, 0}), 0.5),
                  capability_error);
}

TEST_CASE("GroupSU(2) character closed form") {
  const auto su2 = build_model(Family::GroupSU, 2);
  for (int k = 0; k <= 12; ++k) {
    const auto w = make_weight(su2, {k});
    for (double theta : {0.05, 0.31, 1.11, 2.62}) {
      const double expected = std::sin((k + 1) * theta) / ((k + 1) * std::sin(theta));
      CHECK(spherical_eval(su2, w, theta) == Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("spherical functions agree with the zonal-harmonic oracle") {
  for (int d : {2, 3, 5}) {
    const auto model = build_model(Family::Sphere, d);
    for (int k = 1; k <= 6; ++k) {
      const auto zonal = test_support::zonal_harmonic(d, k);
      const auto w = make_weight(model, {k});
      for (int i = 0; i <= 16; ++i) {
        const double theta = M_PI * i / 16.0;
        CHECK(spherical_eval(model, w, theta) ==
              Approx(test_support::zonal_value(zonal, std::cos(theta))).epsilon(1e-11));
      }
    }
  }
}

TEST_CASE("compact spherical functions are bounded by their base value") {
  for (const auto& model : {build_model(Family::Sphere, 2), build_model(Family::Sphere, 4),
                            build_model(Family::GroupSU, 2)}) {
    for (const auto& w : enumerate_weights(model, Rat(200))) {
      CHECK(spherical_eval(model, w, 0.0) == Approx(1.0).epsilon(1e-13));
      for (int i = 0; i <= 40; ++i)
        CHECK(std::abs(spherical_eval(model, w, M_PI * i / 40.0)) <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("holomorphic continuation") {
  const auto s3 = build_model(Family::Sphere, 3);
  const auto su2 = build_model(Family::GroupSU, 2);

  const auto zero = make_weight(s3, {0});
  CHECK(spherical_eval_holo(s3, zero, 2.2) == 1.0);

  // continuation of the k=1 character: cosh r on S^3 and GroupSU(2)
  const auto one = make_weight(s3, {1});
  for (double r : {0.0, 0.17, 1.3, 4.0}) {
    CHECK(spherical_eval_holo(s3, one, r) == Approx(std::cosh(r)).epsilon(1e-14));
    CHECK(spherical_eval_holo(su2, make_weight(su2, {1}), r) ==
          Approx(std::cosh(r)).epsilon(1e-14));
  }

  // matches the compact value as r -> 0 and increases in r
  for (int k = 1; k <= 8; ++k) {
    const auto w = make_weight(s3, {k});
    CHECK(spherical_eval_holo(s3, w, 0.0) == Approx(1.0));
    double prev = 0.0;
    for (double r = 0.0; r <= 3.0; r += 0.25) {
      const double value = spherical_eval_holo(s3, w, r);
      CHECK(value >= prev);
      prev = value;
    }
  }
}

TEST_CASE("dual spherical function of H^3") {
  const auto s3 = build_model(Family::Sphere, 3);

  CHECK(dual_spherical(s3, {0.0, 0.0}, 0.0).real() == Approx(1.0));
  CHECK(dual_spherical(s3, {0.0, 0.0}, 1.0).real() == Approx(1.0 / std::sinh(1.0)));

  // evenness in lambda
  for (double lambda : {0.3, 1.7})
    for (double r : {0.2, 1.1, 3.3})
      CHECK(dual_spherical(s3, {lambda, 0}, r).real() ==
            Approx(dual_spherical(s3, {-lambda, 0}, r).real()).epsilon(1e-15));

  CHECK_THROWS_AS(dual_spherical(build_model(Family::Sphere, 2), {1, 0}, 1.0),
                  capability_error);
}

TEST_CASE("psi~_mu equals phi at spectral parameter i(mu+rho) on S^3") {
  const auto s3 = build_model(Family::Sphere, 3);
  double max_rel = 0.0;
  for (int k = 0; k <= 20; ++k) {
    const auto w = make_weight(s3, {k});
    for (int i = 0; i <= 100; ++i) {
      const double r = 5.0 * i / 100.0;
      const double via_continuation = spherical_eval_holo(s3, w, r);
      const double via_dual = dual_spherical(s3, {0.0, k + 1.0}, r).real();
      max_rel = std::max(max_rel, std::abs(via_continuation - via_dual) /
                                      std::max(1.0, std::abs(via_dual)));
    }
  }
  CHECK(max_rel < 1e-12);
}

TEST_CASE("descent shape reproduces the H^3 closed form") {
  for (double t : {0.05, 0.2, 1.0}) {
    const DualHeatShape shape(1, t);
    for (double r : {1e-9, 0.1, 0.9, 3.0, 9.0}) {
      const double closed =
          std::exp(-r * r / (4.0 * t)) * (r < 1e-8 ? 1.0 : r / std::sinh(r)) / (2.0 * t);
      CHECK(shape(r) == Approx(closed).epsilon(1e-12));
    }
  }
}

TEST_CASE("descent order per model") {
  CHECK(dual_descent_order(build_model(Family::Sphere, 3)) == 1);
  CHECK(dual_descent_order(build_model(Family::GroupSU, 2)) == 1);
  CHECK(dual_descent_order(build_model(Family::Sphere, 5)) == 2);
  CHECK(dual_descent_order(build_model(Family::Sphere, 7)) == 3);
  CHECK_THROWS_AS(dual_descent_order(build_model(Family::Sphere, 2)), capability_error);
  CHECK_THROWS_AS(dual_descent_order(build_model(Family::Sphere, 4)), capability_error);
  CHECK_THROWS_AS(dual_descent_order(build_model(Family::GroupSU, 3)), capability_error);
}

TEST_CASE("kernel series on the radial slice") {
  const auto s2 = build_model(Family::Sphere, 2);
  const Rat cutoff(110);

  // large t: only the constant term survives
  const auto base = kernel_eval(s2, 25.0, RadialPoint::compact(0.0), cutoff);
  CHECK(base.imag() == 0.0);
  CHECK(base.real() == Approx(1.0).epsilon(1e-12));

  // evenness in theta
  for (int i = 0; i <= 16; ++i) {
    const double theta = M_PI * i / 16.0;
    const auto plus = kernel_eval(s2, 0.1, RadialPoint::compact(theta), cutoff);
    const auto minus = kernel_eval(s2, 0.1, RadialPoint::compact(-theta), cutoff);
    CHECK(plus.imag() == 0.0);
    CHECK(plus.real() == Approx(minus.real()).epsilon(1e-12));
  }

  // partial sums converge: the increment bounds d(k) e^{-2t casimir}
  // decrease beyond a model-dependent index and end up negligible
  const double t = 0.25;
  std::vector<double> bounds;
  for (const auto& w : enumerate_weights(s2, cutoff))
    bounds.push_back(static_cast<double>(w.dim) * std::exp(-2.0 * t * to_double(w.casimir)));
  std::size_t start = 1;
  while (start < bounds.size() && bounds[start] >= bounds[start - 1]) ++start;
  for (std::size_t i = start; i + 1 < bounds.size(); ++i) CHECK(bounds[i + 1] < bounds[i]);
  CHECK(bounds.back() < 1e-10);
}
