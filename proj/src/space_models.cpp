#include "symheat/space_models.hpp"

#include "symheat/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symheat {

namespace {

bool contains_root(const std::set<RatVec>& coords, const RatVec& v) {
  return coords.count(v) != 0;
}

/// alpha in `system` is simple iff it is not a sum of two members.
std::vector<std::size_t> find_simple(const std::vector<RestrictedRoot>& roots,
                                     const std::vector<std::size_t>& system) {
  std::vector<std::size_t> out;
  for (std::size_t i : system) {
    bool decomposable = false;
    for (std::size_t a : system) {
      if (decomposable) break;
      for (std::size_t b : system) {
        if (rat_add(roots[a].coords, roots[b].coords) == roots[i].coords) {
          decomposable = true;
          break;
        }
      }
    }
    if (!decomposable) out.push_back(i);
  }
  return out;
}

}  // namespace

Rat inner(const SymmetricSpaceModel& model, const RatVec& lambda, const RatVec& mu) {
  return gram_inner(model.gram(), lambda, mu);
}

void SymmetricSpaceModel::derive_and_validate() {
  rank_ = static_cast<int>(gram_.size());
  if (rank_ < 1) throw config_error(name_, "rank must be at least 1");
  for (const auto& row : gram_)
    if (row.size() != gram_.size()) throw config_error(name_, "gram matrix is not square");
  for (std::size_t i = 0; i < gram_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw config_error(name_, "gram matrix is not symmetric");
  try {
    gram_schmidt(gram_);  // positive definiteness
  } catch (const std::invalid_argument&) {
    throw config_error(name_, "gram matrix is not positive definite");
  }

  if (positive_roots_.empty()) throw config_error(name_, "no positive roots");
  std::set<RatVec> root_coords;
  for (const auto& r : positive_roots_) {
    if (static_cast<int>(r.coords.size()) != rank_)
      throw config_error(name_, "root coordinate length does not match rank");
    if (rat_is_zero(r.coords)) throw config_error(name_, "zero vector listed as a root");
    if (r.multiplicity < 1) throw config_error(name_, "root multiplicity must be positive");
    if (!root_coords.insert(r.coords).second)
      throw config_error(name_, "duplicate positive root");
  }

  sigma_half_.clear();
  sigma_two_.clear();
  for (std::size_t i = 0; i < positive_roots_.size(); ++i) {
    const RatVec& a = positive_roots_[i].coords;
    if (!contains_root(root_coords, rat_scale(Rat(1, 2), a))) sigma_half_.push_back(i);
    if (!contains_root(root_coords, rat_scale(Rat(2), a))) sigma_two_.push_back(i);
  }

  auto verify_simple_list = [&](const std::vector<std::size_t>& listed,
                                const std::vector<std::size_t>& system, const char* label) {
    const std::vector<std::size_t> computed = find_simple(positive_roots_, system);
    std::set<std::size_t> computed_set(computed.begin(), computed.end());
    if (listed.size() != computed.size())
      throw config_error(name_, std::string(label) + ": wrong number of simple roots");
    for (std::size_t i : listed)
      if (!computed_set.count(i))
        throw config_error(name_, std::string(label) + ": listed root is not simple");
  };

  if (sigma_two_simple_.empty()) {
    sigma_two_simple_ = find_simple(positive_roots_, sigma_two_);
    std::sort(sigma_two_simple_.begin(), sigma_two_simple_.end(),
              [&](std::size_t a, std::size_t b) {
                return positive_roots_[a].coords < positive_roots_[b].coords;
              });
  } else {
    verify_simple_list(sigma_two_simple_, sigma_two_, "Sigma_2 simple roots");
  }
  if (sigma_half_simple_.empty()) {
    sigma_half_simple_ = find_simple(positive_roots_, sigma_half_);
    std::sort(sigma_half_simple_.begin(), sigma_half_simple_.end(),
              [&](std::size_t a, std::size_t b) {
                return positive_roots_[a].coords < positive_roots_[b].coords;
              });
  } else {
    verify_simple_list(sigma_half_simple_, sigma_half_, "Sigma_1/2 simple roots");
  }

  if (static_cast<int>(sigma_two_simple_.size()) != rank_)
    throw config_error(name_, "number of Sigma_2 simple roots must equal the rank");

  // Every Sigma_2 positive root must be a Z^+ combination of the simples.
  {
    RatMat basis_t(rank_, rat_zero(rank_));
    for (int j = 0; j < rank_; ++j)
      for (int i = 0; i < rank_; ++i)
        basis_t[i][j] = positive_roots_[sigma_two_simple_[j]].coords[i];
    for (std::size_t idx : sigma_two_) {
      RatVec c = solve_linear(basis_t, positive_roots_[idx].coords);
      for (const Rat& x : c)
        if (x < Rat(0) || x.denominator() != 1)
          throw config_error(name_, "Sigma_2 is not generated by the listed simple roots");
    }
  }

  rho_ = rat_zero(rank_);
  for (const auto& r : positive_roots_)
    rho_ = rat_add(rho_, rat_scale(Rat(r.multiplicity, 2), r.coords));

  // Class-1 fundamental weights: <xi_j, alpha_i> = delta_ij <alpha_i, alpha_i>
  // over the Sigma_2 simple roots.
  fundamental_weights_.clear();
  {
    RatMat system(rank_, rat_zero(rank_));
    for (int i = 0; i < rank_; ++i) {
      const RatVec& alpha = positive_roots_[sigma_two_simple_[i]].coords;
      for (int j = 0; j < rank_; ++j) {
        Rat acc(0);
        for (int l = 0; l < rank_; ++l) acc += gram_[j][l] * alpha[l];
        system[i][j] = acc;
      }
    }
    for (int j = 0; j < rank_; ++j) {
      RatVec rhs = rat_zero(rank_);
      const RatVec& alpha = positive_roots_[sigma_two_simple_[j]].coords;
      rhs[j] = gram_inner(gram_, alpha, alpha);
      fundamental_weights_.push_back(solve_linear(system, rhs));
    }
  }

  for (int j = 0; j < rank_; ++j) {
    for (int i = 0; i < rank_; ++i) {
      const RatVec& alpha = positive_roots_[sigma_two_simple_[i]].coords;
      const Rat want = (i == j) ? gram_inner(gram_, alpha, alpha) : Rat(0);
      if (gram_inner(gram_, fundamental_weights_[j], alpha) != want)
        throw config_error(name_, "fundamental weight duality failed");
    }
    if (gram_inner(gram_, rho_, fundamental_weights_[j]) <= Rat(0))
      throw config_error(name_, "rho pairs nonpositively with a fundamental weight");
    for (int i = 0; i <= j; ++i)
      if (gram_inner(gram_, fundamental_weights_[i], fundamental_weights_[j]) < Rat(0))
        throw config_error(name_, "fundamental weights with negative pairing are unsupported");
  }
}

SymmetricSpaceModel build_model(Family family, int param) {
  SymmetricSpaceModel m;
  m.family_ = family;
  m.param_ = param;
  switch (family) {
    case Family::Sphere: {
      if (param < 2)
        throw config_error("build_model(Sphere)", "Sphere requires d >= 2, got " +
                                                      std::to_string(param));
      m.name_ = "S" + std::to_string(param);
      m.gram_ = {{Rat(1)}};
      m.positive_roots_ = {{{Rat(1)}, param - 1}};
      m.sigma_two_simple_ = {0};
      m.sigma_half_simple_ = {0};
      m.dim_spec_.kind = DimensionSpec::Kind::SphereHarmonic;
      m.dim_spec_.param = param;
      break;
    }
    case Family::GroupSU: {
      if (param < 2)
        throw config_error("build_model(GroupSU)", "GroupSU requires n >= 2, got " +
                                                       std::to_string(param));
      m.name_ = "SU(" + std::to_string(param) + ")";
      const int r = param - 1;
      // Abstract pairings of the A_{n-1} simple roots, all of squared
      // length 1 so that GroupSU(2) matches Sphere(3) spectrally.
      RatMat pairings(r, rat_zero(r));
      for (int i = 0; i < r; ++i) {
        pairings[i][i] = Rat(1);
        if (i + 1 < r) pairings[i][i + 1] = pairings[i + 1][i] = Rat(-1, 2);
      }
      const OrthogonalBasis basis = gram_schmidt(pairings);
      m.gram_.assign(r, rat_zero(r));
      for (int i = 0; i < r; ++i) m.gram_[i][i] = basis.diag[i];
      // positive roots alpha_i + ... + alpha_j, multiplicity 2; the simple
      // chain comes first so the canonical ordering is alpha_1..alpha_r.
      for (int i = 0; i < r; ++i) {
        m.positive_roots_.push_back({basis.coords[i], 2});
        m.sigma_two_simple_.push_back(i);
        m.sigma_half_simple_.push_back(i);
      }
      for (int len = 2; len <= r; ++len)
        for (int i = 0; i + len <= r; ++i) {
          RatVec v = basis.coords[i];
          for (int l = i + 1; l < i + len; ++l) v = rat_add(v, basis.coords[l]);
          m.positive_roots_.push_back({v, 2});
        }
      m.dim_spec_.kind = DimensionSpec::Kind::WeylSquare;
      m.dim_spec_.param = param;
      break;
    }
    case Family::Generic:
      throw config_error("build_model", "Generic models require build_generic_model");
  }
  m.derive_and_validate();
  return m;
}

SymmetricSpaceModel build_generic_model(std::string name,
                                        std::vector<RestrictedRoot> positive_roots,
                                        RatMat gram, DimensionSpec dim_spec) {
  SymmetricSpaceModel m;
  m.family_ = Family::Generic;
  m.name_ = name.empty() ? "generic" : std::move(name);
  m.positive_roots_ = std::move(positive_roots);
  m.gram_ = std::move(gram);
  m.dim_spec_ = std::move(dim_spec);
  if (m.dim_spec_.kind == DimensionSpec::Kind::Polynomial && m.dim_spec_.terms.empty())
    throw config_error(m.name_, "generic model needs a dimension polynomial");
  m.derive_and_validate();
  // the trivial representation is one dimensional on every model
  Rat at_zero(0);
  for (const auto& term : m.dim_spec_.terms) {
    bool constant = true;
    for (int e : term.exponents) constant = constant && e == 0;
    if (constant) at_zero += term.coeff;
  }
  if (at_zero != Rat(1))
    throw config_error(m.name_, "dimension polynomial must evaluate to 1 at the zero weight");
  return m;
}

int manifold_dimension(const SymmetricSpaceModel& m) {
  int dim = m.rank();
  for (const auto& r : m.positive_roots()) dim += r.multiplicity;
  return dim;
}

namespace {

struct DiagramNode {
  Rat length2;
  int multiplicity;
};

/// Cartan integers and node data of the Sigma_{1/2} diagram in canonical
/// simple-root order.
struct Diagram {
  std::vector<DiagramNode> nodes;
  RatMat cartan;  // cartan[i][j] = 2<a_i,a_j>/<a_j,a_j>
};

Diagram make_diagram(const SymmetricSpaceModel& m) {
  const auto& idx = m.sigma_half_simple();
  Diagram d;
  d.cartan.assign(idx.size(), rat_zero(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto& root = m.positive_roots()[idx[i]];
    d.nodes.push_back({gram_inner(m.gram(), root.coords, root.coords), root.multiplicity});
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const RatVec& aj = m.positive_roots()[idx[j]].coords;
      d.cartan[i][j] = Rat(2) * gram_inner(m.gram(), root.coords, aj) /
                       gram_inner(m.gram(), aj, aj);
    }
  }
  return d;
}

/// Classify a connected simply-laced-or-doubled diagram by type letter.
/// Returns "A", "B", "C", "D" or a serialized fallback. Rank-1 diagrams
/// are all "A".
std::string diagram_type(const Diagram& d) {
  const std::size_t n = d.nodes.size();
  if (n == 1) return "A";
  std::vector<int> degree(n, 0);
  int double_bonds = 0, triple_bonds = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rat bond = d.cartan[i][j] * d.cartan[j][i];
      if (bond == Rat(0)) continue;
      ++degree[i], ++degree[j];
      if (bond == Rat(2)) ++double_bonds;
      if (bond == Rat(3)) ++triple_bonds;
    }
  const int max_degree = *std::max_element(degree.begin(), degree.end());
  const int leaves = static_cast<int>(std::count(degree.begin(), degree.end(), 1));
  const bool path = (max_degree <= 2) && (leaves == 2);
  if (path && double_bonds == 0 && triple_bonds == 0) return "A";
  if (path && double_bonds == 1 && triple_bonds == 0) {
    // B: the short roots sit at the double bond; C: the long root does.
    Rat min_len = d.nodes[0].length2;
    for (const auto& nd : d.nodes) min_len = std::min(min_len, nd.length2);
    int short_count = 0;
    for (const auto& nd : d.nodes)
      if (nd.length2 == min_len) ++short_count;
    return short_count == 1 ? "B" : "C";
  }
  if (!path && max_degree == 3 && double_bonds == 0 && triple_bonds == 0 && n >= 4) return "D";
  std::ostringstream os;
  os << "X[";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) os << to_string(d.cartan[i][j]) << (j + 1 < n ? "," : ";");
  os << "]";
  return os.str();
}

}  // namespace

PropagationReport check_propagation(const SymmetricSpaceModel& lower,
                                    const SymmetricSpaceModel& upper) {
  PropagationReport rep;
  const std::size_t rn = lower.sigma_half_simple().size();
  const std::size_t rm = upper.sigma_half_simple().size();
  if (lower.rank() > upper.rank()) {
    rep.detail = "rejected: lower rank exceeds upper rank";
    return rep;
  }
  if (rn > rm) {
    rep.detail = "rejected: lower Sigma_1/2 diagram is larger";
    return rep;
  }
  if (manifold_dimension(lower) > manifold_dimension(upper)) {
    rep.detail = "rejected: lower space has larger dimension";
    return rep;
  }

  const Diagram dl = make_diagram(lower);
  const Diagram du = make_diagram(upper);

  // The matched nodes are the leading r_n simple roots in canonical order;
  // growing the chain appends the new simple roots after them.
  for (std::size_t i = 0; i < rn; ++i)
    for (std::size_t j = 0; j < rn; ++j)
      if (dl.cartan[i][j] != du.cartan[i][j]) {
        rep.detail = "rejected: Sigma_1/2 diagrams disagree on matched simple roots";
        return rep;
      }

  const std::string tl = diagram_type(dl);
  const std::string tu = diagram_type(du);
  if (rn == rm) {
    // Stable rank: the diagrams must agree outright (multiplicities free).
    if (tl != tu) {
      rep.detail = "rejected: Sigma_1/2 diagram types differ (" + tl + " vs " + tu + ")";
      return rep;
    }
  } else {
    if (tl != tu) {
      rep.detail = "rejected: extension changes the Sigma_1/2 diagram type (" + tl + " -> " +
                   tu + ")";
      return rep;
    }
    // A proper extension must keep the multiplicities of the matched
    // simple roots; every classical propagating family does, and it is
    // what separates e.g. GroupSU(2)->GroupSU(3) from Sphere(2)->GroupSU(3).
    for (std::size_t j = 0; j < rn; ++j)
      if (dl.nodes[j].multiplicity != du.nodes[j].multiplicity) {
        rep.detail = "rejected: matched simple root " + std::to_string(j + 1) +
                     " changes multiplicity under a rank extension";
        return rep;
      }
  }

  // Restriction correspondence in coordinates: the matched Sigma_2
  // simple roots and the fundamental weights of the upper model must
  // restrict (= truncate, the bases being orthogonal) to the lower ones.
  const int rl = lower.rank();
  if (static_cast<std::size_t>(rl) > upper.sigma_two_simple().size()) {
    rep.detail = "rejected: upper model has too few Sigma_2 simple roots";
    return rep;
  }
  for (int i = 0; i < rl; ++i)
    for (int j = 0; j < rl; ++j)
      if (lower.gram()[i][j] != upper.gram()[i][j]) {
        rep.detail = "rejected: metric blocks disagree on the common coordinates";
        return rep;
      }
  auto truncates_to = [&](const RatVec& up, const RatVec& low) {
    for (int i = 0; i < rl; ++i)
      if (up[i] != low[i]) return false;
    return true;
  };
  for (int j = 0; j < rl; ++j) {
    const RatVec& up_root = upper.positive_roots()[upper.sigma_two_simple()[j]].coords;
    const RatVec& low_root = lower.positive_roots()[lower.sigma_two_simple()[j]].coords;
    if (!truncates_to(up_root, low_root)) {
      rep.detail = "rejected: matched Sigma_2 simple root does not restrict correctly";
      return rep;
    }
    if (!truncates_to(upper.fundamental_weights()[j], lower.fundamental_weights()[j])) {
      rep.detail = "rejected: fundamental weight " + std::to_string(j + 1) +
                   " does not restrict correctly";
      return rep;
    }
  }

  rep.accepted = true;
  rep.matching.resize(rl);
  for (int j = 0; j < rl; ++j) rep.matching[j] = static_cast<std::size_t>(j);
  rep.detail = (rn == rm) ? "accepted: identical Sigma_1/2 diagrams"
                          : "accepted: " + tl + std::to_string(rn) + " extended to " + tu +
                                std::to_string(rm);
  return rep;
}

namespace {

bool assign_factors(const std::vector<SymmetricSpaceModel>& lower,
                    const std::vector<SymmetricSpaceModel>& upper, std::size_t i,
                    std::vector<bool>& used, ProductPropagationReport& out) {
  if (i == lower.size()) return true;
  for (std::size_t j = 0; j < upper.size(); ++j) {
    if (used[j]) continue;
    PropagationReport r = check_propagation(lower[i], upper[j]);
    if (!r.accepted) continue;
    used[j] = true;
    out.factor_assignment[i] = j;
    out.factor_reports[i] = std::move(r);
    if (assign_factors(lower, upper, i + 1, used, out)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

ProductPropagationReport check_propagation_factorwise(
    const std::vector<SymmetricSpaceModel>& lower_factors,
    const std::vector<SymmetricSpaceModel>& upper_factors) {
  ProductPropagationReport out;
  out.factor_assignment.assign(lower_factors.size(), 0);
  out.factor_reports.assign(lower_factors.size(), {});
  if (lower_factors.size() > upper_factors.size()) {
    out.detail = "rejected: more lower factors than upper factors";
    return out;
  }
  std::vector<bool> used(upper_factors.size(), false);
  out.accepted = assign_factors(lower_factors, upper_factors, 0, used, out);
  out.detail = out.accepted ? "accepted factorwise" : "rejected: no factor assignment works";
  return out;
}

}  // namespace symheat
