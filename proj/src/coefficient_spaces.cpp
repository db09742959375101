#include "symheat/coefficient_spaces.hpp"

#include "symheat/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace symheat {

namespace {

// Exponent above which e^{x} * v is assembled in log space; beyond the
// representable range we refuse rather than return inf.
constexpr double kLogSpaceThreshold = 600.0;
constexpr double kMaxExponent = 709.0;  // ~log(DBL_MAX)

Complex scaled_exp(double exponent, Complex v) {
  if (exponent <= kLogSpaceThreshold) return std::exp(exponent) * v;
  const double mag = std::abs(v);
  if (mag == 0.0) return {0.0, 0.0};
  const double log_total = exponent + std::log(mag);
  if (log_total > kMaxExponent)
    throw std::overflow_error("heat factor overflows double range (exponent " +
                              std::to_string(exponent) + ")");
  return std::exp(log_total) * (v / mag);
}

void check_modes_match(const CoefficientVector& a, const CoefficientVector& b) {
  if (a.mode != b.mode) throw std::invalid_argument("coefficient vectors have different modes");
}

}  // namespace

Complex CoefficientVector::scalar(const std::vector<int>& xi) const {
  const auto it = entries.find(xi);
  if (it == entries.end() || it->second.empty()) return {0.0, 0.0};
  return it->second.front();
}

void CoefficientVector::set_scalar(const std::vector<int>& xi, Complex value) {
  entries[xi] = Block{value};
}

void validate(const SymmetricSpaceModel& model, const CoefficientVector& v) {
  for (const auto& [xi, block] : v.entries) {
    const SphericalWeight w = make_weight(model, xi);  // validates membership
    const std::size_t want =
        v.mode == Mode::KInvariant ? 1 : static_cast<std::size_t>(w.dim);
    if (block.size() != want)
      throw std::invalid_argument("coefficient block at a weight has length " +
                                  std::to_string(block.size()) + ", expected " +
                                  std::to_string(want));
  }
}

namespace {

Complex weighted_inner(const SymmetricSpaceModel& model, const CoefficientVector& a,
                       const CoefficientVector& b, double t2) {
  check_modes_match(a, b);
  Complex acc{0.0, 0.0};
  for (const auto& [xi, block_a] : a.entries) {
    const auto it = b.entries.find(xi);
    if (it == b.entries.end()) continue;
    const Block& block_b = it->second;
    if (block_a.size() != block_b.size())
      throw std::invalid_argument("coefficient blocks disagree in length at a shared weight");
    Complex ip{0.0, 0.0};
    for (std::size_t i = 0; i < block_a.size(); ++i) ip += block_a[i] * std::conj(block_b[i]);
    const SphericalWeight w = make_weight(model, xi);
    const double exponent = t2 == 0.0 ? 0.0 : t2 * to_double(w.casimir);
    acc += scaled_exp(exponent, static_cast<double>(w.dim) * ip);
  }
  return acc;
}

}  // namespace

Complex l2_inner(const SymmetricSpaceModel& model, const CoefficientVector& a,
                 const CoefficientVector& b) {
  return weighted_inner(model, a, b, 0.0);
}

Complex fock_inner(const SymmetricSpaceModel& model, double t, const CoefficientVector& a,
                   const CoefficientVector& b) {
  if (!(t > 0.0)) throw std::invalid_argument("fock_inner: t must be positive");
  return weighted_inner(model, a, b, 2.0 * t);
}

double l2_norm(const SymmetricSpaceModel& model, const CoefficientVector& a) {
  return std::sqrt(std::abs(l2_inner(model, a, a).real()));
}

double fock_norm(const SymmetricSpaceModel& model, double t, const CoefficientVector& a) {
  return std::sqrt(std::abs(fock_inner(model, t, a, a).real()));
}

double embed_heat_factor(const SymmetricSpaceModel& model, double t,
                         const SphericalWeight& mu) {
  (void)model;
  return std::exp(t * to_double(mu.casimir));
}

CoefficientVector to_full(const SymmetricSpaceModel& model, const CoefficientVector& v) {
  if (v.mode != Mode::KInvariant)
    throw std::invalid_argument("to_full expects a KInvariant vector");
  CoefficientVector out;
  out.mode = Mode::Full;
  for (const auto& [xi, block] : v.entries) {
    const SphericalWeight w = make_weight(model, xi);
    Block full(static_cast<std::size_t>(w.dim), Complex{0.0, 0.0});
    if (!block.empty()) full[0] = block[0];
    out.entries[xi] = std::move(full);
  }
  return out;
}

nlohmann::ordered_json coefficients_to_json(const CoefficientVector& v) {
  nlohmann::ordered_json j;
  j["mode"] = v.mode == Mode::Full ? "full" : "k_invariant";
  auto& entries = j["entries"] = nlohmann::ordered_json::array();
  for (const auto& [xi, block] : v.entries) {
    nlohmann::ordered_json e;
    e["weight"] = xi;
    auto& b = e["block"] = nlohmann::ordered_json::array();
    for (const Complex& c : block) b.push_back({c.real(), c.imag()});
    entries.push_back(std::move(e));
  }
  return j;
}

CoefficientVector coefficients_from_json(const SymmetricSpaceModel& model,
                                         const nlohmann::json& j) {
  CoefficientVector v;
  const std::string mode = j.value("mode", "k_invariant");
  if (mode == "full")
    v.mode = Mode::Full;
  else if (mode == "k_invariant")
    v.mode = Mode::KInvariant;
  else
    throw std::invalid_argument("coefficient vector mode must be 'full' or 'k_invariant'");
  for (const auto& e : j.at("entries")) {
    std::vector<int> xi = e.at("weight").get<std::vector<int>>();
    Block block;
    for (const auto& c : e.at("block"))
      block.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
    v.entries[std::move(xi)] = std::move(block);
  }
  validate(model, v);
  return v;
}

}  // namespace symheat
