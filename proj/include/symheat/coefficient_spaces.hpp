#pragma once

// Finitely supported coefficient vectors over Lambda^+ together with the
// two Hilbert structures they carry: the Plancherel inner product
// sum d(mu) <a(mu), b(mu)> and the Fock inner product
// sum d(mu) e^{2t casimir(mu)} <a(mu), b(mu)>.

#include "symheat/space_models.hpp"
#include "symheat/weight_lattice.hpp"

#include <complex>
#include <map>
#include <vector>

#include "json.hpp"

namespace symheat {

enum class Mode { Full, KInvariant };

using Complex = std::complex<double>;
using Block = std::vector<Complex>;

struct CoefficientVector {
  Mode mode = Mode::KInvariant;
  // keyed by xi-coordinates; KInvariant blocks have length 1, Full blocks
  // length d(mu)
  std::map<std::vector<int>, Block> entries;

  /// Scalar access for KInvariant vectors; missing keys read as 0.
  Complex scalar(const std::vector<int>& xi) const;
  void set_scalar(const std::vector<int>& xi, Complex value);
};

/// Checks every key against the model (Cartan-Helgason membership) and
/// every block length against the mode. Throws std::invalid_argument.
void validate(const SymmetricSpaceModel& model, const CoefficientVector& v);

/// sum_mu d(mu) <a(mu), b(mu)>; conjugation on the second argument.
Complex l2_inner(const SymmetricSpaceModel& model, const CoefficientVector& a,
                 const CoefficientVector& b);

/// sum_mu d(mu) e^{2 t casimir(mu)} <a(mu), b(mu)>; t > 0.
Complex fock_inner(const SymmetricSpaceModel& model, double t, const CoefficientVector& a,
                   const CoefficientVector& b);

double l2_norm(const SymmetricSpaceModel& model, const CoefficientVector& a);
double fock_norm(const SymmetricSpaceModel& model, double t, const CoefficientVector& a);

/// e^{t casimir(mu)}; t may be negative (inverse direction).
double embed_heat_factor(const SymmetricSpaceModel& model, double t, const SphericalWeight& mu);

/// KInvariant -> Full: scalar becomes the first component of a d(mu)
/// block. Isometric for both inner products.
CoefficientVector to_full(const SymmetricSpaceModel& model, const CoefficientVector& v);

/// JSON form: {"mode": "full"|"k_invariant",
///             "entries": [{"weight": [k_1..k_r], "block": [[re,im],...]}]}
nlohmann::ordered_json coefficients_to_json(const CoefficientVector& v);
CoefficientVector coefficients_from_json(const SymmetricSpaceModel& model,
                                         const nlohmann::json& j);

}  // namespace symheat
