#pragma once

// The Segal-Bargmann transform in coefficient space: the diagonal
// multiplier e^{-t casimir(mu)} from the Plancherel side to the Fock side,
// its inverse on finite support, and the reproducing-kernel coefficients.

#include "symheat/coefficient_spaces.hpp"

namespace symheat {

/// output(mu) = e^{-t casimir(mu)} a(mu); support preserved. Unitary from
/// the L2 inner product to the Fock inner product at the same t.
CoefficientVector heat_apply(const SymmetricSpaceModel& model, double t,
                             const CoefficientVector& a);

/// Inverse multiplier on finite support. Throws std::overflow_error
/// naming the weight when t * casimir(mu) > 600.
CoefficientVector heat_invert(const SymmetricSpaceModel& model, double t,
                              const CoefficientVector& b);

/// KInvariant expansion coefficients of the kernel k_t against the
/// holomorphically extended spherical functions:
/// c(mu) = d(mu) e^{-2 t casimir(mu)} for all mu with casimir <= cutoff.
CoefficientVector kernel_coefficients(const SymmetricSpaceModel& model, double t,
                                      const Rat& casimir_cutoff);

}  // namespace symheat
