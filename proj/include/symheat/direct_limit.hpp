#pragma once

// Propagation-indexed chains of models: the weight map iota, the four
// isometric embeddings (gamma/delta on the full coefficient spaces,
// eta/phi on the K-invariant ones), commuting-diagram checks against the
// heat transform, and finite-stage representatives of direct-limit
// elements.

#include "symheat/coefficient_spaces.hpp"
#include "symheat/heat_transform.hpp"
#include "symheat/report.hpp"
#include "symheat/space_models.hpp"

#include <optional>
#include <vector>

namespace symheat {

/// A validated propagation pair. `t` is required by the Fock-side maps
/// delta/phi and by check_diagram.
struct StageMap {
  SymmetricSpaceModel lower;
  SymmetricSpaceModel upper;
  std::vector<std::size_t> matching;
  std::optional<double> t;
};

/// Throws std::invalid_argument when check_propagation rejects the pair.
StageMap make_stage_map(SymmetricSpaceModel lower, SymmetricSpaceModel upper,
                        std::optional<double> t = std::nullopt);

/// iota(sum k_j xi_{lower,j}) = sum k_j xi_{upper,j}, zero padded; the
/// returned weight carries the upper model's dimension and Casimir value.
SphericalWeight iota(const StageMap& map, const SphericalWeight& mu);

/// gamma: out(iota(mu)) = sqrt(d_low(mu)/d_up(iota(mu))) a(mu), the block
/// placed in the leading d_low(mu) coordinates. Acts blockwise on either
/// mode; isometric for the L2 inner products.
CoefficientVector gamma_embed(const StageMap& map, const CoefficientVector& a);

/// delta: gamma's scaling times e^{t cas_low(mu)} / e^{t cas_up(iota(mu))};
/// isometric for the Fock inner products at the map's t.
CoefficientVector delta_embed(const StageMap& map, const CoefficientVector& b);

/// eta / phi: the K-invariant counterparts (scalar blocks only).
CoefficientVector eta_embed(const StageMap& map, const CoefficientVector& a);
CoefficientVector phi_embed(const StageMap& map, const CoefficientVector& a);

/// Compares H_t,upper(embed(a)) with embed_t(H_t,lower(a)), where the pair
/// (embed, embed_t) is (gamma, delta) in Full mode and (eta, phi) in
/// KInvariant mode. Reports the maximum componentwise relative deviation.
VerificationReport check_diagram(const StageMap& map, const CoefficientVector& a,
                                 double tolerance = 1e-13);

/// A registered propagation chain; stages are append-only.
class Chain {
 public:
  Chain(std::vector<SymmetricSpaceModel> stages, double t);
  void append_stage(SymmetricSpaceModel model);

  std::size_t size() const { return stages_.size(); }
  const SymmetricSpaceModel& stage(std::size_t i) const;
  double t() const { return t_; }

  /// Stage map n -> m (n <= m); by functoriality it equals the composite
  /// of the adjacent maps.
  StageMap map_between(std::size_t n, std::size_t m) const;

 private:
  std::vector<SymmetricSpaceModel> stages_;
  double t_;
};

/// The two direct systems over a chain: the Plancherel side is glued by
/// gamma/eta, the Fock side by delta/phi at the chain's t.
enum class LimitSide { Plancherel, Fock };

/// A direct-limit element represented at a finite stage.
struct LimitElement {
  std::size_t stage = 0;
  LimitSide side = LimitSide::Plancherel;
  CoefficientVector coefficients;
};

/// Pushes the representative to stage m >= x.stage through the gluing map
/// of its side and mode (gamma/eta on the Plancherel side, delta/phi on
/// the Fock side).
LimitElement embed_to_stage(const Chain& chain, const LimitElement& x, std::size_t m);

/// Equality of limit elements on a common side: embed both to the larger
/// stage and compare componentwise within `tolerance`.
bool limit_equal(const Chain& chain, const LimitElement& x, const LimitElement& y,
                 double tolerance = 1e-12);

/// The limit heat transform: applies heat_apply at the element's own
/// stage, carrying the result to the Fock side. Well defined on the limit
/// because the diagrams commute stagewise; t must equal the chain's t,
/// since that is the parameter the Fock side is glued at.
LimitElement limit_heat_apply(const Chain& chain, double t, const LimitElement& x);

}  // namespace symheat
