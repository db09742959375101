#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symheat/errors.hpp"
#include "symheat/space_models.hpp"

#include "support/oracles.hpp"

using namespace symheat;

TEST_CASE("sphere models match the so(d+1) matrix-model oracle") {
  for (int d : {2, 3, 5, 7}) {
    const SymmetricSpaceModel model = build_model(Family::Sphere, d);
    CHECK(model.rank() == 1);
    REQUIRE(model.positive_roots().size() == 1);
    CHECK(model.positive_roots()[0].multiplicity == d - 1);
    CHECK(inner(model, model.positive_roots()[0].coords, model.positive_roots()[0].coords) ==
          Rat(1));

    const auto oracle = test_support::sphere_matrix_model(d);
    REQUIRE(oracle.rays.size() == 1);  // a single restricted-root ray
    CHECK(oracle.rays[0].multiplicity == d - 1);
    CHECK(oracle.centralizer_dim_in_s == 1);  // a = span(X) is maximal abelian
  }
}

TEST_CASE("sphere rho values") {
  CHECK(build_model(Family::Sphere, 2).rho() == RatVec{Rat(1, 2)});
  CHECK(build_model(Family::Sphere, 5).rho() == RatVec{Rat(2)});
}

TEST_CASE("group SU(2) matches the complexified-group oracle") {
  const SymmetricSpaceModel model = build_model(Family::GroupSU, 2);
  CHECK(model.rank() == 1);
  REQUIRE(model.positive_roots().size() == 1);
  CHECK(model.positive_roots()[0].multiplicity == 2);
  CHECK(model.rho() == RatVec{Rat(1)});

  const auto oracle = test_support::group_su2_matrix_model();
  REQUIRE(oracle.rays.size() == 1);
  CHECK(oracle.rays[0].multiplicity == 2);
  CHECK(oracle.centralizer_dim_in_s == 1);
}

TEST_CASE("group SU(n) root count and duality") {
  for (int n : {3, 4, 5}) {
    const SymmetricSpaceModel model = build_model(Family::GroupSU, n);
    CHECK(model.rank() == n - 1);
    CHECK(model.positive_roots().size() == static_cast<std::size_t>(n * (n - 1) / 2));
    for (const auto& root : model.positive_roots()) {
      CHECK(root.multiplicity == 2);
      CHECK(inner(model, root.coords, root.coords) == Rat(1));
    }
    // fundamental-weight duality, exact
    for (int j = 0; j < model.rank(); ++j)
      for (int i = 0; i < model.rank(); ++i) {
        const RatVec& alpha = model.positive_roots()[model.sigma_two_simple()[i]].coords;
        const Rat expected = i == j ? inner(model, alpha, alpha) : Rat(0);
        CHECK(inner(model, model.fundamental_weights()[j], alpha) == expected);
      }
    // rho = half the multiplicity-weighted root sum, recomputed
    RatVec rho = rat_zero(model.rank());
    for (const auto& r : model.positive_roots())
      rho = rat_add(rho, rat_scale(Rat(r.multiplicity, 2), r.coords));
    CHECK(rho == model.rho());
    CHECK(manifold_dimension(model) == n * n - 1);
  }
}

TEST_CASE("inner product examples") {
  const auto s2 = build_model(Family::Sphere, 2);
  const auto s5 = build_model(Family::Sphere, 5);
  const RatVec alpha{Rat(1)};
  CHECK(inner(s2, alpha, alpha) == Rat(1));
  CHECK(inner(s2, rat_zero(1), alpha) == Rat(0));
  CHECK(inner(s5, s5.rho(), s5.rho()) == Rat(4));
  CHECK_THROWS_AS(inner(s2, RatVec{Rat(1), Rat(0)}, alpha), std::invalid_argument);
}

TEST_CASE("unsupported build parameters raise configuration errors") {
  CHECK_THROWS_AS(build_model(Family::Sphere, 1), config_error);
  CHECK_THROWS_AS(build_model(Family::GroupSU, 1), config_error);
  CHECK_THROWS_AS(build_model(Family::Generic, 3), config_error);
  try {
    build_model(Family::Sphere, 0);
  } catch (const config_error& e) {
    CHECK(std::string(e.what()).find("Sphere") != std::string::npos);
  }
}

TEST_CASE("propagation accepts sphere and SU chains, rejects the crossover") {
  const auto s2 = build_model(Family::Sphere, 2);
  const auto s3 = build_model(Family::Sphere, 3);
  const auto su2 = build_model(Family::GroupSU, 2);
  const auto su3 = build_model(Family::GroupSU, 3);

  const auto spheres = check_propagation(s2, s3);
  CHECK(spheres.accepted);
  CHECK(spheres.matching == std::vector<std::size_t>{0});

  const auto sus = check_propagation(su2, su3);
  CHECK(sus.accepted);
  CHECK(sus.matching == std::vector<std::size_t>{0});

  const auto crossover = check_propagation(s2, su3);
  CHECK_FALSE(crossover.accepted);
  CHECK(crossover.detail.find("multiplicity") != std::string::npos);

  // rank cannot drop, and neither can the manifold dimension
  CHECK_FALSE(check_propagation(su3, su2).accepted);
  CHECK_FALSE(check_propagation(build_model(Family::Sphere, 5), s2).accepted);
}

TEST_CASE("propagation is reflexive and transitive on the supported chains") {
  std::vector<SymmetricSpaceModel> spheres, sus;
  for (int d = 2; d <= 7; ++d) spheres.push_back(build_model(Family::Sphere, d));
  for (int n = 2; n <= 5; ++n) sus.push_back(build_model(Family::GroupSU, n));

  for (const auto& m : spheres) CHECK(check_propagation(m, m).accepted);
  for (const auto& m : sus) CHECK(check_propagation(m, m).accepted);

  for (std::size_t i = 0; i < spheres.size(); ++i)
    for (std::size_t j = i; j < spheres.size(); ++j)
      CHECK(check_propagation(spheres[i], spheres[j]).accepted);
  for (std::size_t i = 0; i < sus.size(); ++i)
    for (std::size_t j = i; j < sus.size(); ++j)
      CHECK(check_propagation(sus[i], sus[j]).accepted);
}

TEST_CASE("factorwise propagation on products") {
  const auto s2 = build_model(Family::Sphere, 2);
  const auto s4 = build_model(Family::Sphere, 4);
  const auto su2 = build_model(Family::GroupSU, 2);
  const auto su4 = build_model(Family::GroupSU, 4);

  const auto ok = check_propagation_factorwise({s2, su2}, {su4, s4});
  CHECK(ok.accepted);
  REQUIRE(ok.factor_assignment.size() == 2);
  CHECK(ok.factor_assignment[0] == 1);  // sphere factor must take the sphere slot
  CHECK(ok.factor_assignment[1] == 0);

  CHECK_FALSE(check_propagation_factorwise({s2, s2, s2}, {s4, s4}).accepted);
}

TEST_CASE("generic models validate their data") {
  DimensionSpec dim;
  dim.kind = DimensionSpec::Kind::Polynomial;
  dim.terms.push_back({Rat(1), {1}});  // d(mu) = k
  dim.terms.push_back({Rat(1), {0}});  // + 1
  const auto model = build_generic_model(
      "A1m3", {{RatVec{Rat(1)}, 3}}, RatMat{{Rat(1)}}, dim);
  CHECK(model.rank() == 1);
  CHECK(model.rho() == RatVec{Rat(3, 2)});

  // non-positive-definite gram
  CHECK_THROWS_AS(build_generic_model("bad", {{RatVec{Rat(1)}, 1}}, RatMat{{Rat(-1)}}, dim),
                  config_error);
  // zero multiplicity
  CHECK_THROWS_AS(build_generic_model("bad", {{RatVec{Rat(1)}, 0}}, RatMat{{Rat(1)}}, dim),
                  config_error);
  // duplicate root
  CHECK_THROWS_AS(build_generic_model(
                      "bad", {{RatVec{Rat(1)}, 1}, {RatVec{Rat(1)}, 2}}, RatMat{{Rat(1)}}, dim),
                  config_error);
}

TEST_CASE("sigma subsets on a nonreduced generic system") {
  // positive roots {alpha, 2 alpha}: Sigma_1/2 drops 2 alpha, Sigma_2
  // drops alpha.
  DimensionSpec dim;
  dim.kind = DimensionSpec::Kind::Polynomial;
  dim.terms.push_back({Rat(1), {0}});
  const auto model = build_generic_model(
      "BC1", {{RatVec{Rat(1)}, 2}, {RatVec{Rat(2)}, 1}}, RatMat{{Rat(1, 4)}}, dim);
  REQUIRE(model.sigma_half().size() == 1);
  REQUIRE(model.sigma_two().size() == 1);
  CHECK(model.positive_roots()[model.sigma_half()[0]].coords == RatVec{Rat(1)});
  CHECK(model.positive_roots()[model.sigma_two()[0]].coords == RatVec{Rat(2)});
}
