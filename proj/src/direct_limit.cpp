#include "symheat/direct_limit.hpp"

#include <cmath>
#include <stdexcept>

namespace symheat {

StageMap make_stage_map(SymmetricSpaceModel lower, SymmetricSpaceModel upper,
                        std::optional<double> t) {
  PropagationReport rep = check_propagation(lower, upper);
  if (!rep.accepted)
    throw std::invalid_argument("make_stage_map: " + lower.name() + " -> " + upper.name() +
                                " " + rep.detail);
  if (t && !(*t > 0.0)) throw std::invalid_argument("make_stage_map: t must be positive");
  return StageMap{std::move(lower), std::move(upper), std::move(rep.matching), t};
}

SphericalWeight iota(const StageMap& map, const SphericalWeight& mu) {
  if (static_cast<int>(mu.xi.size()) != map.lower.rank())
    throw std::invalid_argument("iota: weight does not belong to the lower model");
  std::vector<int> up(map.upper.rank(), 0);
  for (std::size_t j = 0; j < mu.xi.size(); ++j) up[map.matching[j]] = mu.xi[j];
  return make_weight(map.upper, std::move(up));
}

namespace {

enum class EmbedKind { Gamma, Delta, Eta, Phi };

CoefficientVector embed_impl(const StageMap& map, const CoefficientVector& a, EmbedKind kind) {
  const bool fock_side = kind == EmbedKind::Delta || kind == EmbedKind::Phi;
  const bool k_invariant_only = kind == EmbedKind::Eta || kind == EmbedKind::Phi;
  if (k_invariant_only && a.mode != Mode::KInvariant)
    throw std::invalid_argument("eta/phi are defined on KInvariant vectors only");
  if (fock_side && !map.t)
    throw std::invalid_argument("delta/phi require the stage map to carry t");

  CoefficientVector out;
  out.mode = a.mode;
  for (const auto& [xi, block] : a.entries) {
    const SphericalWeight low = make_weight(map.lower, xi);
    const SphericalWeight up = iota(map, low);
    if (low.dim > up.dim)
      throw std::invalid_argument("embedding would shrink the block at a weight");
    double factor = std::sqrt(static_cast<double>(low.dim) / static_cast<double>(up.dim));
    if (fock_side)
      factor *= std::exp(*map.t * (to_double(low.casimir) - to_double(up.casimir)));
    Block target(a.mode == Mode::Full ? static_cast<std::size_t>(up.dim) : 1,
                 Complex{0.0, 0.0});
    if (a.mode == Mode::Full && block.size() != static_cast<std::size_t>(low.dim))
      throw std::invalid_argument("embedding input block has the wrong length");
    for (std::size_t i = 0; i < block.size() && i < target.size(); ++i)
      target[i] = factor * block[i];
    out.entries[up.xi] = std::move(target);
  }
  return out;
}

}  // namespace

CoefficientVector gamma_embed(const StageMap& map, const CoefficientVector& a) {
  return embed_impl(map, a, EmbedKind::Gamma);
}

CoefficientVector delta_embed(const StageMap& map, const CoefficientVector& b) {
  return embed_impl(map, b, EmbedKind::Delta);
}

CoefficientVector eta_embed(const StageMap& map, const CoefficientVector& a) {
  return embed_impl(map, a, EmbedKind::Eta);
}

CoefficientVector phi_embed(const StageMap& map, const CoefficientVector& a) {
  return embed_impl(map, a, EmbedKind::Phi);
}

namespace {

double max_componentwise_deviation(const CoefficientVector& a, const CoefficientVector& b) {
  double dev = 0.0;
  auto scan = [&dev](const CoefficientVector& x, const CoefficientVector& y) {
    for (const auto& [xi, block] : x.entries) {
      const auto it = y.entries.find(xi);
      for (std::size_t i = 0; i < block.size(); ++i) {
        const Complex xv = block[i];
        const Complex yv =
            (it != y.entries.end() && i < it->second.size()) ? it->second[i] : Complex{};
        const double scale = std::max(std::abs(xv), std::abs(yv));
        if (scale > 0.0) dev = std::max(dev, std::abs(xv - yv) / scale);
      }
    }
  };
  scan(a, b);
  scan(b, a);
  return dev;
}

}  // namespace

VerificationReport check_diagram(const StageMap& map, const CoefficientVector& a,
                                 double tolerance) {
  if (!map.t) throw std::invalid_argument("check_diagram requires the stage map to carry t");
  const double t = *map.t;
  const bool full = a.mode == Mode::Full;
  const CoefficientVector heat_then_embed =
      full ? delta_embed(map, heat_apply(map.lower, t, a))
           : phi_embed(map, heat_apply(map.lower, t, a));
  const CoefficientVector embed_then_heat =
      heat_apply(map.upper, t, full ? gamma_embed(map, a) : eta_embed(map, a));
  const double dev = max_componentwise_deviation(heat_then_embed, embed_then_heat);
  VerificationReport rep = VerificationReport::make(
      "commuting_diagram", map.lower.name() + "->" + map.upper.name(), dev, 0.0, tolerance,
      /*absolute_comparison=*/true);
  rep.params["t"] = t;
  rep.params["mode"] = full ? "full" : "k_invariant";
  rep.params["support"] = a.entries.size();
  return rep;
}

Chain::Chain(std::vector<SymmetricSpaceModel> stages, double t) : t_(t) {
  if (stages.empty()) throw std::invalid_argument("Chain: no stages");
  if (!(t > 0.0)) throw std::invalid_argument("Chain: t must be positive");
  stages_.push_back(std::move(stages.front()));
  for (std::size_t i = 1; i < stages.size(); ++i) append_stage(std::move(stages[i]));
}

void Chain::append_stage(SymmetricSpaceModel model) {
  if (!stages_.empty()) {
    const PropagationReport rep = check_propagation(stages_.back(), model);
    if (!rep.accepted)
      throw std::invalid_argument("Chain: " + stages_.back().name() + " -> " + model.name() +
                                  " " + rep.detail);
  }
  stages_.push_back(std::move(model));
}

const SymmetricSpaceModel& Chain::stage(std::size_t i) const {
  if (i >= stages_.size()) throw std::invalid_argument("Chain: stage index out of range");
  return stages_[i];
}

StageMap Chain::map_between(std::size_t n, std::size_t m) const {
  if (n > m || m >= stages_.size())
    throw std::invalid_argument("Chain: invalid stage pair");
  return make_stage_map(stages_[n], stages_[m], t_);
}

LimitElement embed_to_stage(const Chain& chain, const LimitElement& x, std::size_t m) {
  if (x.stage >= chain.size() || m >= chain.size() || m < x.stage)
    throw std::invalid_argument("embed_to_stage: invalid stage");
  if (m == x.stage) return x;
  const StageMap map = chain.map_between(x.stage, m);
  const bool full = x.coefficients.mode == Mode::Full;
  LimitElement out;
  out.stage = m;
  out.side = x.side;
  if (x.side == LimitSide::Plancherel)
    out.coefficients = full ? gamma_embed(map, x.coefficients) : eta_embed(map, x.coefficients);
  else
    out.coefficients = full ? delta_embed(map, x.coefficients) : phi_embed(map, x.coefficients);
  return out;
}

bool limit_equal(const Chain& chain, const LimitElement& x, const LimitElement& y,
                 double tolerance) {
  if (x.coefficients.mode != y.coefficients.mode || x.side != y.side) return false;
  const std::size_t m = std::max(x.stage, y.stage);
  const LimitElement xe = embed_to_stage(chain, x, m);
  const LimitElement ye = embed_to_stage(chain, y, m);
  return max_componentwise_deviation(xe.coefficients, ye.coefficients) <= tolerance;
}

LimitElement limit_heat_apply(const Chain& chain, double t, const LimitElement& x) {
  if (x.stage >= chain.size())
    throw std::invalid_argument("limit_heat_apply: stage not registered in the chain");
  if (x.side != LimitSide::Plancherel)
    throw std::invalid_argument("limit_heat_apply: the element is already on the Fock side");
  if (t != chain.t())
    throw std::invalid_argument(
        "limit_heat_apply: t must equal the chain's t, the Fock side is glued at that value");
  LimitElement out;
  out.stage = x.stage;
  out.side = LimitSide::Fock;
  out.coefficients = heat_apply(chain.stage(x.stage), t, x.coefficients);
  return out;
}

}  // namespace symheat
