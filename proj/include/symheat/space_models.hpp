#pragma once

// Restricted-root and metric data of the supported compact symmetric
// spaces, plus the propagation check between two models. A model is the
// computational stand-in for the space itself: everything downstream
// (weights, transforms, embeddings) only ever sees this data.

#include "symheat/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symheat {

enum class Family { Sphere, GroupSU, Generic };

struct RestrictedRoot {
  RatVec coords;     // in the model's orthogonal coordinate basis
  int multiplicity;  // m_alpha >= 1
};

/// How d(mu) is computed for this model.
struct DimensionSpec {
  enum class Kind {
    SphereHarmonic,  // spherical harmonics of degree k in (d+1) variables
    WeylSquare,      // squared Weyl dimension of the matching SU(n) weight
    Polynomial,      // user polynomial in the xi-coordinates
  };
  struct Term {
    Rat coeff;
    std::vector<int> exponents;  // one exponent per xi-coordinate
  };
  Kind kind = Kind::Polynomial;
  int param = 0;  // d for SphereHarmonic, n for WeylSquare
  std::vector<Term> terms;
};

class SymmetricSpaceModel {
 public:
  Family family() const { return family_; }
  int param() const { return param_; }
  int rank() const { return rank_; }
  const std::string& name() const { return name_; }

  const std::vector<RestrictedRoot>& positive_roots() const { return positive_roots_; }
  const RatMat& gram() const { return gram_; }
  const RatVec& rho() const { return rho_; }
  const std::vector<RatVec>& fundamental_weights() const { return fundamental_weights_; }

  /// Index subsets of positive_roots() selecting Sigma^+_{1/2} and
  /// Sigma^+_2, and the simple roots of Sigma^+_2 in the canonical order
  /// used by fundamental_weights() and propagation matchings.
  const std::vector<std::size_t>& sigma_half() const { return sigma_half_; }
  const std::vector<std::size_t>& sigma_two() const { return sigma_two_; }
  const std::vector<std::size_t>& sigma_half_simple() const { return sigma_half_simple_; }
  const std::vector<std::size_t>& sigma_two_simple() const { return sigma_two_simple_; }

  const DimensionSpec& dim_spec() const { return dim_spec_; }

  friend SymmetricSpaceModel build_model(Family family, int param);
  friend SymmetricSpaceModel build_generic_model(std::string name,
                                                 std::vector<RestrictedRoot> positive_roots,
                                                 RatMat gram, DimensionSpec dim_spec);

 private:
  SymmetricSpaceModel() = default;
  void derive_and_validate();  // fills rho, xi, sigma subsets; checks invariants

  Family family_ = Family::Generic;
  int param_ = 0;
  int rank_ = 0;
  std::string name_;
  std::vector<RestrictedRoot> positive_roots_;
  RatMat gram_;
  RatVec rho_;
  std::vector<RatVec> fundamental_weights_;
  std::vector<std::size_t> sigma_half_, sigma_two_;
  std::vector<std::size_t> sigma_half_simple_, sigma_two_simple_;
  DimensionSpec dim_spec_;
};

/// Sphere: param = d >= 2, the sphere S^d with the unit round metric
/// (single restricted root of squared length 1, multiplicity d-1).
/// GroupSU: param = n >= 2, the group SU(n) as a symmetric space (type
/// A_{n-1} restricted roots, multiplicity 2, roots of squared length 1 so
/// that GroupSU(2) is spectrally identical to Sphere(3)).
/// Throws config_error for unsupported families or parameters.
SymmetricSpaceModel build_model(Family family, int param);

/// Generic model from user data. Roots are given directly in coordinates;
/// gram must be symmetric positive definite. Only algebraic operations are
/// available on generic models.
SymmetricSpaceModel build_generic_model(std::string name,
                                        std::vector<RestrictedRoot> positive_roots,
                                        RatMat gram, DimensionSpec dim_spec);

/// <lambda, mu> through the model metric; exact.
Rat inner(const SymmetricSpaceModel& model, const RatVec& lambda, const RatVec& mu);

/// dim M = rank + sum of root multiplicities.
int manifold_dimension(const SymmetricSpaceModel& model);

struct PropagationReport {
  bool accepted = false;
  /// matching[j] = index into upper's sigma_two_simple() of the simple
  /// root whose restriction is lower's j-th simple root. Empty on
  /// rejection.
  std::vector<std::size_t> matching;
  std::string detail;
};

/// Decides whether `upper` propagates `lower` from the root data alone:
/// the Sigma_{1/2} Dynkin diagrams must agree after extending the lower
/// diagram, the matched simple roots must restrict correctly through the
/// coordinate inclusion, and a proper rank extension must preserve the
/// multiplicities of the matched simple roots. Rejection is a report
/// outcome, never an exception.
PropagationReport check_propagation(const SymmetricSpaceModel& lower,
                                    const SymmetricSpaceModel& upper);

/// Factorwise propagation for reducible models given as factor lists.
/// Accepted iff the factors can be enumerated so that upper_i propagates
/// lower_i for every lower factor.
struct ProductPropagationReport {
  bool accepted = false;
  std::vector<std::size_t> factor_assignment;  // lower factor i -> upper factor index
  std::vector<PropagationReport> factor_reports;
  std::string detail;
};
ProductPropagationReport check_propagation_factorwise(
    const std::vector<SymmetricSpaceModel>& lower_factors,
    const std::vector<SymmetricSpaceModel>& upper_factors);

}  // namespace symheat
