#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symheat/direct_limit.hpp"
#include "symheat/random.hpp"

#include <cmath>

using namespace symheat;
using doctest::Approx;

namespace {

Chain sphere_chain(double t, int top = 4) {
  std::vector<SymmetricSpaceModel> stages;
  for (int d = 2; d <= top; ++d) stages.push_back(build_model(Family::Sphere, d));
  return Chain(std::move(stages), t);
}

}  // namespace

TEST_CASE("iota pads xi-coordinates and recomputes the upper data") {
  const auto s2 = build_model(Family::Sphere, 2);
  const auto s3 = build_model(Family::Sphere, 3);
  const StageMap spheres = make_stage_map(s2, s3);
  for (int k = 0; k <= 5; ++k) {
    const auto up = iota(spheres, make_weight(s2, {k}));
    CHECK(up.xi == std::vector<int>{k});
    CHECK(up.casimir == Rat(k * (k + 2)));  // upper casimir, not the lower one
  }

  const StageMap sus =
      make_stage_map(build_model(Family::GroupSU, 2), build_model(Family::GroupSU, 3));
  const auto up = iota(sus, make_weight(sus.lower, {2}));
  CHECK(up.xi == std::vector<int>{2, 0});
  CHECK(up.dim == 36);  // Weyl dimension of (2,0) squared

  const auto zero = iota(sus, make_weight(sus.lower, {0}));
  CHECK(zero.xi == std::vector<int>{0, 0});
  CHECK(zero.dim == 1);

  CHECK_THROWS_AS(make_stage_map(s2, build_model(Family::GroupSU, 3)),
                  std::invalid_argument);
}

TEST_CASE("iota preserves Cartan-Helgason membership and xi-coordinates") {
  const StageMap map =
      make_stage_map(build_model(Family::GroupSU, 3), build_model(Family::GroupSU, 5));
  for (const auto& w : enumerate_weights(map.lower, Rat(20))) {
    const auto up = iota(map, w);  // make_weight validates membership
    for (std::size_t j = 0; j < w.xi.size(); ++j) CHECK(up.xi[map.matching[j]] == w.xi[j]);
  }
}

TEST_CASE("gamma scaling example on S2 -> S3") {
  const auto s2 = build_model(Family::Sphere, 2);
  const auto s3 = build_model(Family::Sphere, 3);
  const StageMap map = make_stage_map(s2, s3);

  CoefficientVector a;
  a.mode = Mode::Full;
  a.entries[{2}] = Block(5, Complex{0.0, 0.0});  // d_2(2) = 5
  a.entries[{2}][0] = {1.0, 0.0};
  const auto out = gamma_embed(map, a);
  REQUIRE(out.entries.count({2}) == 1);
  const Block& block = out.entries.at({2});
  REQUIRE(block.size() == 9);  // d_3(2) = 9
  CHECK(block[0].real() == Approx(std::sqrt(5.0 / 9.0)).epsilon(1e-15));
  for (std::size_t i = 1; i < block.size(); ++i) CHECK(std::abs(block[i]) == 0.0);

  const auto empty = gamma_embed(map, CoefficientVector{Mode::Full, {}});
  CHECK(empty.entries.empty());
}

TEST_CASE("eta scaling example and the constant's invariance") {
  const auto s2 = build_model(Family::Sphere, 2);
  const auto s3 = build_model(Family::Sphere, 3);
  const StageMap map = make_stage_map(s2, s3);

  CoefficientVector f;
  f.set_scalar({1}, {1.0, 0.0});
  const auto out = eta_embed(map, f);
  CHECK(out.scalar({1}).real() == Approx(std::sqrt(3.0 / 4.0)).epsilon(1e-15));

  CoefficientVector constant;
  constant.set_scalar({0}, {2.5, 1.0});
  CHECK(eta_embed(map, constant).scalar({0}) == Complex{2.5, 1.0});

  // the zero weight is fixed by the Fock-side maps too: both casimirs are
  // zero and both dimensions are one
  const StageMap with_t = make_stage_map(s2, s3, 0.3);
  CHECK(delta_embed(with_t, constant).scalar({0}) == Complex{2.5, 1.0});
  CHECK(phi_embed(with_t, constant).scalar({0}) == Complex{2.5, 1.0});

  CoefficientVector full;
  full.mode = Mode::Full;
  full.entries[{1}] = Block(3, Complex{1.0, 0.0});
  CHECK_THROWS_AS(eta_embed(map, full), std::invalid_argument);
  CHECK_THROWS_AS(phi_embed(map, f), std::invalid_argument);  // no t on this map
}

TEST_CASE("all four embeddings are isometries") {
  for (double t : {0.01, 0.1, 1.0}) {
    const Chain chain = sphere_chain(t);
    for (std::size_t n = 0; n + 1 < chain.size(); ++n) {
      const StageMap map = chain.map_between(n, n + 1);
      const auto support = enumerate_weights(map.lower, Rat(30));
      Rng rng(1000 + 31 * n + static_cast<int>(100 * t));
      for (int trial = 0; trial < 100; ++trial) {
        const auto full = random_coefficients(rng, Mode::Full, support);
        const auto kinv = random_coefficients(rng, Mode::KInvariant, support);

        CHECK(l2_norm(map.upper, gamma_embed(map, full)) ==
              Approx(l2_norm(map.lower, full)).epsilon(1e-12));
        CHECK(fock_norm(map.upper, t, delta_embed(map, full)) ==
              Approx(fock_norm(map.lower, t, full)).epsilon(1e-12));
        CHECK(l2_norm(map.upper, eta_embed(map, kinv)) ==
              Approx(l2_norm(map.lower, kinv)).epsilon(1e-12));
        CHECK(fock_norm(map.upper, t, phi_embed(map, kinv)) ==
              Approx(fock_norm(map.lower, t, kinv)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("diagrams commute in both modes") {
  const Chain chain = sphere_chain(0.1);
  const StageMap map = chain.map_between(0, 1);
  const auto support = enumerate_weights(map.lower, Rat(30));
  Rng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const auto full = random_coefficients(rng, Mode::Full, support);
    const auto rep = check_diagram(map, full);
    CHECK(rep.passed);
    CHECK(rep.computed < 1e-13);

    const auto kinv = random_coefficients(rng, Mode::KInvariant, support);
    CHECK(check_diagram(map, kinv).computed < 1e-13);
  }

  CoefficientVector zero_weight;
  zero_weight.set_scalar({0}, {1.0, -2.0});
  CHECK(check_diagram(map, zero_weight).computed == 0.0);
}

TEST_CASE("two-step composition agrees with the direct map") {
  const Chain chain = sphere_chain(0.1, 4);
  const StageMap direct = chain.map_between(0, 2);
  const StageMap first = chain.map_between(0, 1);
  const StageMap second = chain.map_between(1, 2);
  const auto support = enumerate_weights(chain.stage(0), Rat(30));
  Rng rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_coefficients(rng, Mode::Full, support);
    const auto via = gamma_embed(second, gamma_embed(first, a));
    const auto straight = gamma_embed(direct, a);
    REQUIRE(via.entries.size() == straight.entries.size());
    for (const auto& [xi, block] : via.entries) {
      const Block& sb = straight.entries.at(xi);
      for (std::size_t i = 0; i < block.size(); ++i) {
        const double scale = std::max({std::abs(block[i]), std::abs(sb[i]), 1e-300});
        CHECK(std::abs(block[i] - sb[i]) / scale < 1e-13);
      }
    }
    // delta functoriality includes the heat-factor ratios
    const auto dvia = delta_embed(second, delta_embed(first, a));
    const auto dstraight = delta_embed(direct, a);
    for (const auto& [xi, block] : dvia.entries) {
      const Block& sb = dstraight.entries.at(xi);
      for (std::size_t i = 0; i < block.size(); ++i) {
        const double scale = std::max({std::abs(block[i]), std::abs(sb[i]), 1e-300});
        CHECK(std::abs(block[i] - sb[i]) / scale < 1e-13);
      }
    }
  }
}

TEST_CASE("diagram check over a composed stage map") {
  const Chain chain = sphere_chain(0.1, 4);
  const StageMap direct = chain.map_between(0, 2);
  const auto support = enumerate_weights(chain.stage(0), Rat(30));
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_coefficients(rng, Mode::Full, support);
    CHECK(check_diagram(direct, a).computed < 1e-13);
  }
}

TEST_CASE("limit elements: equality, heat, norms") {
  const double t = 0.2;
  const Chain chain = sphere_chain(t);
  const auto support = enumerate_weights(chain.stage(0), Rat(30));
  Rng rng(9);
  for (Mode mode : {Mode::Full, Mode::KInvariant}) {
    for (int trial = 0; trial < 25; ++trial) {
      const LimitElement x{0, LimitSide::Plancherel, random_coefficients(rng, mode, support)};

      // the same element at any later stage
      for (std::size_t m = 1; m < chain.size(); ++m)
        CHECK(limit_equal(chain, x, embed_to_stage(chain, x, m)));

      // heat lands on the Fock side, where it commutes with the gluing
      for (std::size_t m = 1; m < chain.size(); ++m) {
        const auto a = limit_heat_apply(chain, t, embed_to_stage(chain, x, m));
        const auto b = embed_to_stage(chain, limit_heat_apply(chain, t, x), m);
        CHECK(a.side == LimitSide::Fock);
        CHECK(limit_equal(chain, a, b));
      }

      // unitarity at every representing stage of the transform
      const double l2 = l2_norm(chain.stage(0), x.coefficients);
      const LimitElement hx = limit_heat_apply(chain, t, x);
      for (std::size_t m = 0; m < chain.size(); ++m) {
        const LimitElement at_m = embed_to_stage(chain, hx, m);
        CHECK(fock_norm(chain.stage(m), t, at_m.coefficients) == Approx(l2).epsilon(1e-12));
      }
    }
  }

  const LimitElement zero{0, LimitSide::Plancherel, CoefficientVector{Mode::Full, {}}};
  CHECK(limit_heat_apply(chain, t, zero).coefficients.entries.empty());
  CHECK_THROWS_AS(limit_heat_apply(chain, t, LimitElement{99, LimitSide::Plancherel, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(limit_heat_apply(chain, t, limit_heat_apply(chain, t, zero)),
                  std::invalid_argument);
  CHECK_THROWS_AS(limit_heat_apply(chain, 0.5, zero), std::invalid_argument);
  // elements on different sides never compare equal
  CHECK_FALSE(limit_equal(chain, zero, limit_heat_apply(chain, t, zero)));
}

TEST_CASE("chains validate their stages") {
  CHECK_THROWS_AS(Chain({build_model(Family::Sphere, 4), build_model(Family::Sphere, 2)}, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(sphere_chain(0.0), std::invalid_argument);
  Chain chain = sphere_chain(0.1, 3);  // stages S2, S3
  CHECK_NOTHROW(chain.append_stage(build_model(Family::Sphere, 4)));
  CHECK(chain.size() == 3);
  CHECK_THROWS_AS(chain.append_stage(build_model(Family::GroupSU, 4)),
                  std::invalid_argument);
}

TEST_CASE("group chain diagrams") {
  std::vector<SymmetricSpaceModel> stages;
  for (int n = 2; n <= 4; ++n) stages.push_back(build_model(Family::GroupSU, n));
  const Chain chain(std::move(stages), 0.1);
  const StageMap map = chain.map_between(0, 1);
  const auto support = enumerate_weights(map.lower, Rat(15));
  Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_coefficients(rng, Mode::Full, support);
    CHECK(check_diagram(map, a).computed < 1e-13);
    CHECK(l2_norm(map.upper, gamma_embed(map, a)) ==
          Approx(l2_norm(map.lower, a)).epsilon(1e-12));
  }
}
