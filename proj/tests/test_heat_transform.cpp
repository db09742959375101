#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symheat/heat_transform.hpp"
#include "symheat/random.hpp"

#include <cmath>

using namespace symheat;
using doctest::Approx;

TEST_CASE("heat transform examples") {
  const auto s2 = build_model(Family::Sphere, 2);

  CoefficientVector zero_only;
  zero_only.set_scalar({0}, {0.7, -0.2});
  const auto unchanged = heat_apply(s2, 3.0, zero_only);
  CHECK(unchanged.scalar({0}) == Complex{0.7, -0.2});

  CoefficientVector one;
  one.set_scalar({1}, {1.0, 0.0});
  const auto scaled = heat_apply(s2, 0.5, one);
  CHECK(scaled.scalar({1}).real() == Approx(std::exp(-1.0)).epsilon(1e-15));

  CHECK_THROWS_AS(heat_apply(s2, 0.0, one), std::invalid_argument);
  CHECK_THROWS_AS(heat_invert(s2, -0.5, one), std::invalid_argument);
}

TEST_CASE("heat semigroup on random vectors") {
  const auto su3 = build_model(Family::GroupSU, 3);
  const auto support = enumerate_weights(su3, Rat(25));
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_coefficients(rng, Mode::Full, support);
    const auto left = heat_apply(su3, 0.3, heat_apply(su3, 0.4, a));
    const auto right = heat_apply(su3, 0.7, a);
    for (const auto& [xi, block] : left.entries) {
      const Block& rb = right.entries.at(xi);
      for (std::size_t i = 0; i < block.size(); ++i) {
        const double scale = std::max(std::abs(block[i]), std::abs(rb[i]));
        if (scale > 0.0) CHECK(std::abs(block[i] - rb[i]) / scale <= 1e-14);
      }
    }
  }
}

TEST_CASE("invert undoes apply on finite support") {
  const auto s3 = build_model(Family::Sphere, 3);
  const auto support = enumerate_weights(s3, Rat(35));
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_coefficients(rng, Mode::Full, support);
    const auto round = heat_invert(s3, 0.2, heat_apply(s3, 0.2, a));
    for (const auto& [xi, block] : a.entries) {
      const Block& rb = round.entries.at(xi);
      for (std::size_t i = 0; i < block.size(); ++i)
        CHECK(std::abs(block[i] - rb[i]) <= 1e-12 * std::max(1.0, std::abs(block[i])));
    }
  }

  CoefficientVector zero_only;
  zero_only.set_scalar({0}, {0.5, 0.5});
  CHECK(heat_invert(s3, 5.0, zero_only).scalar({0}) == Complex{0.5, 0.5});

  CoefficientVector e;
  e.set_scalar({1}, {std::exp(-1.0), 0.0});
  CHECK(heat_invert(build_model(Family::Sphere, 2), 0.5, e).scalar({1}).real() ==
        Approx(1.0).epsilon(1e-14));
}

TEST_CASE("invert overflow guard names the weight") {
  const auto s2 = build_model(Family::Sphere, 2);
  CoefficientVector big;
  big.set_scalar({30}, {1.0, 0.0});  // casimir 930
  try {
    heat_invert(s2, 1.0, big);
    FAIL("expected overflow");
  } catch (const std::overflow_error& e) {
    CHECK(std::string(e.what()).find("[30]") != std::string::npos);
  }
}

TEST_CASE("kernel coefficients") {
  const auto s2 = build_model(Family::Sphere, 2);
  const auto coeffs = kernel_coefficients(s2, 0.1, Rat(110));
  CHECK(coeffs.mode == Mode::KInvariant);
  CHECK(coeffs.scalar({0}).real() == 1.0);
  CHECK(coeffs.scalar({1}).real() == Approx(3.0 * std::exp(-0.4)).epsilon(1e-15));
  for (const auto& [xi, block] : coeffs.entries) CHECK(block.front().real() > 0.0);

  // d(k) e^{-2t k(k+1)} decreases once the heat factor wins
  std::vector<double> values;
  for (const auto& [xi, block] : coeffs.entries) values.push_back(block.front().real());
  std::size_t i = 1;
  while (i < values.size() && values[i] >= values[i - 1]) ++i;
  for (; i + 1 < values.size(); ++i) CHECK(values[i + 1] < values[i]);
}

TEST_CASE("unitarity between the two inner products") {
  for (const auto& model : {build_model(Family::Sphere, 5), build_model(Family::GroupSU, 4)}) {
    const auto support = enumerate_weights(model, Rat(20));
    Rng rng(17);
    for (double t : {0.01, 0.1, 1.0}) {
      for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_coefficients(rng, trial % 2 ? Mode::Full : Mode::KInvariant,
                                           support);
        const auto b = heat_apply(model, t, a);
        const double in = l2_norm(model, a);
        const double out = fock_norm(model, t, b);
        CHECK(std::abs(out - in) <= 1e-12 * in);
      }
    }
  }
}
