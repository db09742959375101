#pragma once

// The spherical weight semilattice Lambda^+ of a model: enumeration below
// a Casimir cutoff, dimensions d(mu) and Casimir values <mu+2rho, mu>.

#include "symheat/rational.hpp"
#include "symheat/space_models.hpp"

#include <cstdint>
#include <vector>

namespace symheat {

struct SphericalWeight {
  std::vector<int> xi;   // coefficients k_j in mu = sum k_j xi_j, all >= 0
  RatVec vec;            // coordinates of mu
  long long dim = 1;     // d(mu)
  Rat casimir;           // <mu + 2 rho, mu>
};

/// Builds the weight with the given xi-coordinates, validating the
/// Cartan-Helgason membership and caching dim and casimir. Throws
/// std::invalid_argument if the coordinates are negative, of the wrong
/// length, or fail membership.
SphericalWeight make_weight(const SymmetricSpaceModel& model, std::vector<int> xi);

/// d(mu). Throws std::invalid_argument if mu fails Cartan-Helgason
/// membership, std::overflow_error if the value does not fit 64 bits.
long long dimension(const SymmetricSpaceModel& model, const std::vector<int>& xi);

/// <mu + 2 rho, mu> through the model Gram matrix; exact.
Rat casimir_value(const SymmetricSpaceModel& model, const std::vector<int>& xi);

/// Exactly the mu in Lambda^+ with casimir <= cutoff, sorted by
/// (casimir, lexicographic xi). Always contains the zero weight.
std::vector<SphericalWeight> enumerate_weights(const SymmetricSpaceModel& model,
                                               const Rat& cutoff);

}  // namespace symheat
