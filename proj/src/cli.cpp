#include "symheat/cli.hpp"

#include "symheat/errors.hpp"
#include "symheat/random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

namespace symheat::cli {

namespace {

// ---------------------------------------------------------------------------
// config parsing

Rat rat_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(std::stoll(s));
      return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw config_error(where, "cannot parse rational '" + s + "'");
    }
  }
  if (j.is_number_float()) {
    double x = j.get<double>();
    long long den = 1;
    while (x != std::floor(x) && den < (1LL << 40)) {
      x *= 2.0;
      den *= 2;
    }
    if (x != std::floor(x)) throw config_error(where, "number is not a dyadic rational");
    return Rat(static_cast<long long>(x), den);
  }
  throw config_error(where, "expected a number or a 'p/q' string");
}

SymmetricSpaceModel model_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("family"))
    throw config_error(where, "model descriptor needs a 'family' field");
  const std::string family = j["family"].get<std::string>();
  try {
    if (family == "sphere") return build_model(Family::Sphere, j.at("d").get<int>());
    if (family == "group_su") return build_model(Family::GroupSU, j.at("n").get<int>());
    if (family == "generic") {
      RatMat gram;
      for (std::size_t r = 0; r < j.at("gram").size(); ++r) {
        RatVec row;
        for (std::size_t c = 0; c < j["gram"][r].size(); ++c)
          row.push_back(rat_from_json(j["gram"][r][c],
                                      where + ".gram[" + std::to_string(r) + "]"));
        gram.push_back(std::move(row));
      }
      std::vector<RestrictedRoot> roots;
      for (std::size_t i = 0; i < j.at("roots").size(); ++i) {
        const auto& rj = j["roots"][i];
        RestrictedRoot root;
        for (const auto& c : rj.at("coords"))
          root.coords.push_back(rat_from_json(c, where + ".roots[" + std::to_string(i) + "]"));
        root.multiplicity = rj.at("multiplicity").get<int>();
        roots.push_back(std::move(root));
      }
      DimensionSpec dim;
      dim.kind = DimensionSpec::Kind::Polynomial;
      for (std::size_t i = 0; i < j.at("dimension_polynomial").size(); ++i) {
        const auto& tj = j["dimension_polynomial"][i];
        DimensionSpec::Term term;
        term.coeff = rat_from_json(tj.at("coeff"), where + ".dimension_polynomial");
        term.exponents = tj.at("exponents").get<std::vector<int>>();
        dim.terms.push_back(std::move(term));
      }
      return build_generic_model(j.value("name", "generic"), std::move(roots),
                                 std::move(gram), std::move(dim));
    }
  } catch (const config_error&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw config_error(where, e.what());
  }
  throw config_error(where + ".family", "unknown family '" + family + "'");
}

const std::set<std::string> kSuiteNames = {"lattice",    "schur",      "plancherel",
                                           "heat_identity", "fock_inner", "kernel",
                                           "diagrams",   "limits"};

}  // namespace

RunConfig parse_config(const nlohmann::json& j) {
  RunConfig config;
  if (!j.is_object()) throw config_error("config", "top level must be a JSON object");

  if (j.contains("models")) {
    for (std::size_t i = 0; i < j["models"].size(); ++i)
      config.models.push_back(
          model_from_json(j["models"][i], "models[" + std::to_string(i) + "]"));
  }
  if (j.contains("chains")) {
    for (std::size_t i = 0; i < j["chains"].size(); ++i) {
      const auto& cj = j["chains"][i];
      const std::string where = "chains[" + std::to_string(i) + "]";
      try {
        const std::string family = cj.at("family").get<std::string>();
        const auto params = cj.at("params_per_stage").get<std::vector<int>>();
        const double t = cj.at("t").get<double>();
        if (params.size() < 2) throw config_error(where, "a chain needs at least two stages");
        std::vector<SymmetricSpaceModel> stages;
        for (int p : params) {
          if (family == "sphere")
            stages.push_back(build_model(Family::Sphere, p));
          else if (family == "group_su")
            stages.push_back(build_model(Family::GroupSU, p));
          else
            throw config_error(where + ".family", "chains support 'sphere' and 'group_su'");
        }
        config.chains.emplace_back(std::move(stages), t);
      } catch (const config_error&) {
        throw;
      } catch (const std::exception& e) {
        throw config_error(where, e.what());
      }
    }
  }
  if (j.contains("t_values")) {
    config.t_values = j["t_values"].get<std::vector<double>>();
    for (double t : config.t_values)
      if (!(t > 0.0)) throw config_error("t_values", "entries must be positive");
  }
  if (j.contains("cutoff")) config.cutoff = rat_from_json(j["cutoff"], "cutoff");
  if (config.cutoff < Rat(0)) throw config_error("cutoff", "must be nonnegative");
  if (j.contains("suites")) {
    for (std::size_t i = 0; i < j["suites"].size(); ++i) {
      const std::string name = j["suites"][i].get<std::string>();
      if (!kSuiteNames.count(name))
        throw config_error("suites[" + std::to_string(i) + "]", "unknown suite '" + name + "'");
      if (std::find(config.suites.begin(), config.suites.end(), name) == config.suites.end())
        config.suites.push_back(name);
    }
  }
  if (j.contains("quadrature")) {
    const auto& qj = j["quadrature"];
    if (qj.contains("scheme")) {
      const std::string s = qj["scheme"].get<std::string>();
      if (s == "gauss_legendre")
        config.quadrature.scheme = QuadratureSpec::Scheme::GaussLegendre;
      else if (s == "tanh_sinh")
        config.quadrature.scheme = QuadratureSpec::Scheme::TanhSinh;
      else
        throw config_error("quadrature.scheme", "unknown scheme '" + s + "'");
    }
    if (qj.contains("panels")) config.quadrature.panels = qj["panels"].get<int>();
    if (config.quadrature.panels < 8) throw config_error("quadrature.panels", "must be >= 8");
    if (qj.contains("radial_cutoff")) {
      config.quadrature.radial_cutoff = qj["radial_cutoff"].get<double>();
      config.quadrature_cutoff_overridden = true;
    }
    if (qj.contains("target_tol"))
      config.quadrature.target_tol = qj["target_tol"].get<double>();
  }
  if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("output")) config.output = j["output"].get<std::string>();

  const bool needs_t = std::any_of(config.suites.begin(), config.suites.end(),
                                   [](const std::string& s) {
                                     return s == "heat_identity" || s == "fock_inner" ||
                                            s == "kernel";
                                   });
  if (needs_t && config.t_values.empty())
    throw config_error("t_values", "must be nonempty when heat suites are selected");
  return config;
}

// ---------------------------------------------------------------------------
// suite machinery

namespace {

struct SuiteOutput {
  std::vector<VerificationReport> reports;
  std::map<std::string, std::string> csv_files;
};

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fmt_label(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", x);
  return buf;
}

std::string file_label(const std::string& model_name) {
  std::string out;
  for (char c : model_name)
    if (c != '(' && c != ')') out += c;
  return out;
}

std::string weight_label(const std::vector<int>& xi) {
  std::string s;
  for (std::size_t i = 0; i < xi.size(); ++i) s += (i ? " " : "") + std::to_string(xi[i]);
  return s;
}

VerificationReport skipped_report(const std::string& suite, const std::string& model,
                                  const std::string& reason) {
  VerificationReport rep;
  rep.identity = suite + "_skipped";
  rep.model = model;
  rep.passed = true;
  rep.params["skipped"] = true;
  rep.params["reason"] = reason;
  return rep;
}

/// Quadrature spec for integrals containing a heat kernel h_s: the default
/// cutoff formula unless the user pinned one.
QuadratureSpec dual_spec(const RunConfig& config, double s) {
  QuadratureSpec spec = config.quadrature;
  if (!config.quadrature_cutoff_overridden)
    spec.radial_cutoff = default_quadrature(s).radial_cutoff;
  return spec;
}

SuiteOutput suite_lattice(const RunConfig& config) {
  SuiteOutput out;
  for (const auto& model : config.models) {
    const auto weights = enumerate_weights(model, config.cutoff);

    bool zero_present = !weights.empty() && weights.front().casimir == Rat(0) &&
                        std::all_of(weights.front().xi.begin(), weights.front().xi.end(),
                                    [](int k) { return k == 0; });
    VerificationReport zero = VerificationReport::make(
        "lattice_zero_weight", model.name(), zero_present ? 1.0 : 0.0, 1.0, 0.0, true);
    zero.params["weights"] = weights.size();
    out.reports.push_back(zero);

    // prefix property at half the cutoff
    const auto half = enumerate_weights(model, config.cutoff / Rat(2));
    bool prefix = half.size() <= weights.size();
    for (std::size_t i = 0; prefix && i < half.size(); ++i)
      prefix = half[i].xi == weights[i].xi;
    out.reports.push_back(VerificationReport::make("lattice_prefix_property", model.name(),
                                                   prefix ? 1.0 : 0.0, 1.0, 0.0, true));

    // rho and duality re-derived exactly
    RatVec rho = rat_zero(model.rank());
    for (const auto& r : model.positive_roots())
      rho = rat_add(rho, rat_scale(Rat(r.multiplicity, 2), r.coords));
    bool rho_ok = rho == model.rho();
    bool duality_ok = true;
    for (int jj = 0; jj < model.rank() && duality_ok; ++jj)
      for (int ii = 0; ii < model.rank() && duality_ok; ++ii) {
        const RatVec& alpha = model.positive_roots()[model.sigma_two_simple()[ii]].coords;
        const Rat want = ii == jj ? gram_inner(model.gram(), alpha, alpha) : Rat(0);
        duality_ok = gram_inner(model.gram(), model.fundamental_weights()[jj], alpha) == want;
      }
    out.reports.push_back(VerificationReport::make("lattice_rho_and_duality", model.name(),
                                                   rho_ok && duality_ok ? 1.0 : 0.0, 1.0, 0.0,
                                                   true));

    // casimir monotone along each coordinate ray
    bool monotone = true;
    for (int jj = 0; jj < model.rank() && monotone; ++jj) {
      Rat prev(-1);
      for (int k = 0; k <= 5; ++k) {
        std::vector<int> xi(model.rank(), 0);
        xi[jj] = k;
        const Rat c = casimir_value(model, xi);
        if (c <= prev) {
          monotone = false;
          break;
        }
        prev = c;
      }
    }
    out.reports.push_back(VerificationReport::make("lattice_casimir_monotone", model.name(),
                                                   monotone ? 1.0 : 0.0, 1.0, 0.0, true));

    bool dims_ok = !weights.empty() && weights.front().dim == 1;
    for (const auto& w : weights) dims_ok = dims_ok && w.dim >= 1;
    out.reports.push_back(VerificationReport::make("lattice_dimension_positive", model.name(),
                                                   dims_ok ? 1.0 : 0.0, 1.0, 0.0, true));

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"weight", "dimension", "casimir"};
    for (double t : config.t_values) header.push_back("heat_factor_t=" + fmt_label(t));
    rows.push_back(header);
    for (const auto& w : weights) {
      std::vector<std::string> row{weight_label(w.xi), std::to_string(w.dim),
                                   fmt17(to_double(w.casimir))};
      for (double t : config.t_values)
        row.push_back(fmt17(std::exp(-t * to_double(w.casimir))));
      rows.push_back(std::move(row));
    }
    out.csv_files["lattice_" + file_label(model.name()) + ".csv"] = csv_table(rows);
  }
  return out;
}

SuiteOutput suite_schur(const RunConfig& config) {
  SuiteOutput out;
  for (const auto& model : config.models) {
    if (!supports_spherical_eval(model)) {
      out.reports.push_back(skipped_report("schur", model.name(), "no spherical functions"));
      continue;
    }
    const int kmax = 10;
    std::vector<SphericalWeight> weights;
    for (int k = 0; k <= kmax; ++k) weights.push_back(make_weight(model, {k}));
    double max_off = 0.0;
    for (int k = 0; k <= kmax; ++k) {
      for (int l = 0; l <= k; ++l) {
        const double value = integrate_radial_compact(
            model,
            [&](double theta) {
              return spherical_eval(model, weights[k], theta) *
                     spherical_eval(model, weights[l], theta);
            },
            config.quadrature);
        if (k == l) {
          VerificationReport rep = VerificationReport::make(
              "schur_diagonal", model.name(), value, 1.0 / static_cast<double>(weights[k].dim),
              1e-9, /*absolute_comparison=*/true);
          rep.params["k"] = k;
          out.reports.push_back(rep);
        } else {
          max_off = std::max(max_off, std::abs(value));
        }
      }
    }
    VerificationReport off = VerificationReport::make("schur_off_diagonal", model.name(),
                                                      max_off, 0.0, 1e-10, true);
    off.params["k_max"] = kmax;
    out.reports.push_back(off);
  }
  return out;
}

SuiteOutput suite_plancherel(const RunConfig& config) {
  SuiteOutput out;
  for (const auto& model : config.models) {
    if (!supports_spherical_eval(model)) {
      out.reports.push_back(
          skipped_report("plancherel", model.name(), "no spherical functions"));
      continue;
    }
    {
      VerificationReport rep = verify_plancherel(
          model, [](double theta) { return std::exp(std::cos(theta)); }, config.cutoff,
          config.quadrature, 1e-4);
      rep.params["f"] = "exp(cos theta)";
      out.reports.push_back(rep);
    }
    {
      const SphericalWeight two = make_weight(model, {2});
      VerificationReport rep = verify_plancherel(
          model, [&](double theta) { return spherical_eval(model, two, theta); },
          config.cutoff, config.quadrature, 1e-9);
      rep.params["f"] = "psi_2";
      out.reports.push_back(rep);
    }
  }
  return out;
}

SuiteOutput suite_heat_identity(const RunConfig& config) {
  SuiteOutput out;
  Rng suite_rng = Rng(config.seed).fork(0x68656174);  // "heat"
  for (const auto& model : config.models) {
    const auto weights = enumerate_weights(model, config.cutoff);
    // unitarity of H_t between the two inner products
    for (double t : config.t_values) {
      double max_defect = 0.0;
      Rng rng = suite_rng.fork(std::hash<std::string>{}(model.name()) ^
                               std::hash<double>{}(t));
      for (int trial = 0; trial < 1000; ++trial) {
        const Mode mode = trial % 2 == 0 ? Mode::Full : Mode::KInvariant;
        const CoefficientVector a = random_coefficients(rng, mode, weights);
        const CoefficientVector b = heat_apply(model, t, a);
        const double in = l2_norm(model, a);
        const double outn = fock_norm(model, t, b);
        if (in > 0.0) max_defect = std::max(max_defect, std::abs(outn - in) / in);
      }
      VerificationReport rep = VerificationReport::make("heat_unitarity", model.name(),
                                                        max_defect, 0.0, 1e-12, true);
      rep.params["t"] = t;
      rep.params["vectors"] = 1000;
      out.reports.push_back(rep);
    }
    // semigroup law on coefficients
    {
      double max_dev = 0.0;
      Rng rng = suite_rng.fork(std::hash<std::string>{}(model.name() + "#semigroup"));
      for (int trial = 0; trial < 100; ++trial) {
        const CoefficientVector a = random_coefficients(rng, Mode::Full, weights);
        for (std::size_t i = 0; i < config.t_values.size(); ++i)
          for (std::size_t j = i; j < config.t_values.size(); ++j) {
            const double t1 = config.t_values[i], t2 = config.t_values[j];
            const CoefficientVector left = heat_apply(model, t1, heat_apply(model, t2, a));
            const CoefficientVector right = heat_apply(model, t1 + t2, a);
            for (const auto& [xi, block] : left.entries) {
              const Block& rb = right.entries.at(xi);
              for (std::size_t c = 0; c < block.size(); ++c) {
                const double scale = std::max(std::abs(block[c]), std::abs(rb[c]));
                if (scale > 0.0)
                  max_dev = std::max(max_dev, std::abs(block[c] - rb[c]) / scale);
              }
            }
          }
      }
      VerificationReport rep = VerificationReport::make("heat_semigroup", model.name(),
                                                        max_dev, 0.0, 1e-14, true);
      rep.params["vectors"] = 100;
      out.reports.push_back(rep);
    }
    // dual heat integral identity and kernel mass on the hyperbolic dual
    if (supports_dual_kernel(model) && supports_spherical_eval(model)) {
      for (double t : {0.05, 0.1}) {
        const QuadratureSpec spec = dual_spec(config, 2.0 * t);
        const DualHeatKernel kernel(model, t, dual_spec(config, t));
        const double mass = integrate_radial_dual(
            model, [&](double r) { return kernel(r); }, dual_spec(config, t), t);
        VerificationReport mass_rep = VerificationReport::make(
            "dual_heat_mass", model.name(), mass, 1.0, 1e-8);
        mass_rep.params["t"] = t;
        mass_rep.quadrature["calibration_constant"] = kernel.calibration_constant();
        out.reports.push_back(mass_rep);
        const bool h3 = (model.family() == Family::Sphere && model.param() == 3) ||
                        (model.family() == Family::GroupSU && model.param() == 2);
        if (h3)
          for (double lambda : {0.5, 1.0, 2.0})
            out.reports.push_back(verify_heat_identity(model, lambda, t, spec, 1e-6));
        // the same integral against the continued spherical function
        const SphericalWeight one = make_weight(model, {1});
        const DualHeatKernel doubled(model, 2.0 * t, spec);
        const double integral = integrate_radial_dual(
            model,
            [&](double r) { return doubled(r) * spherical_eval_holo(model, one, r); }, spec,
            2.0 * t);
        VerificationReport eq33 = VerificationReport::make(
            "heat_psi_integral", model.name(), integral,
            std::exp(2.0 * t * to_double(one.casimir)), 1e-6);
        eq33.params["k"] = 1;
        eq33.params["t"] = t;
        out.reports.push_back(eq33);
      }
    } else {
      out.reports.push_back(
          skipped_report("heat_identity_dual", model.name(), "no odd hyperbolic dual"));
    }
  }
  return out;
}

SuiteOutput suite_fock_inner(const RunConfig& config) {
  SuiteOutput out;
  for (const auto& model : config.models) {
    if (!supports_dual_kernel(model) || !supports_spherical_eval(model)) {
      out.reports.push_back(
          skipped_report("fock_inner", model.name(), "no odd hyperbolic dual"));
      continue;
    }
    for (double t : {0.02, 0.05})
      for (int k = 0; k <= 5; ++k)
        out.reports.push_back(verify_fock_inner(model, make_weight(model, {k}), t,
                                                dual_spec(config, 2.0 * t), 1e-5));
  }
  return out;
}

SuiteOutput suite_kernel(const RunConfig& config) {
  SuiteOutput out;
  for (const auto& model : config.models) {
    const double t = config.t_values.front();
    const CoefficientVector coeffs = kernel_coefficients(model, t, config.cutoff);
    bool positive = !coeffs.entries.empty();
    for (const auto& [xi, block] : coeffs.entries)
      positive = positive && block.front().real() > 0.0;
    VerificationReport pos = VerificationReport::make("kernel_coefficients_positive",
                                                      model.name(), positive ? 1.0 : 0.0, 1.0,
                                                      0.0, true);
    pos.params["t"] = t;
    pos.params["terms"] = coeffs.entries.size();
    if (!coeffs.entries.empty())
      pos.quadrature["truncation_tail_estimate"] = coeffs.entries.rbegin()->second[0].real();
    out.reports.push_back(pos);

    // the coefficient sequence decreases past a model-dependent index
    if (model.rank() == 1) {
      std::vector<double> values;
      for (const auto& [xi, block] : coeffs.entries) values.push_back(block.front().real());
      std::size_t first_decrease = 1;
      while (first_decrease < values.size() && values[first_decrease] >= values[first_decrease - 1])
        ++first_decrease;
      bool decreasing = true;
      for (std::size_t i = first_decrease; i + 1 < values.size(); ++i)
        decreasing = decreasing && values[i + 1] < values[i];
      VerificationReport dec = VerificationReport::make(
          "kernel_coefficients_eventually_decreasing", model.name(), decreasing ? 1.0 : 0.0,
          1.0, 0.0, true);
      dec.params["first_decrease_index"] = first_decrease;
      out.reports.push_back(dec);
    }

    if (!supports_spherical_eval(model)) {
      out.reports.push_back(skipped_report("kernel_eval", model.name(),
                                           "no spherical functions for the series"));
      continue;
    }

    // reality and evenness of the truncated series on the compact slice
    double max_im = 0.0, max_odd = 0.0;
    for (int i = 0; i <= 32; ++i) {
      const double theta = M_PI * i / 32.0;
      const auto plus = kernel_eval(model, t, RadialPoint::compact(theta), config.cutoff);
      const auto minus = kernel_eval(model, t, RadialPoint::compact(-theta), config.cutoff);
      max_im = std::max({max_im, std::abs(plus.imag()), std::abs(minus.imag())});
      const double scale = std::max({std::abs(plus.real()), std::abs(minus.real()), 1.0});
      max_odd = std::max(max_odd, std::abs(plus.real() - minus.real()) / scale);
    }
    VerificationReport reality = VerificationReport::make("kernel_real_and_even",
                                                          model.name(), max_im + max_odd, 0.0,
                                                          1e-12, true);
    reality.params["t"] = t;
    out.reports.push_back(reality);

    // base-point limit: for large t only the zero weight survives
    const double at_base = kernel_eval(model, 20.0, RadialPoint::compact(0.0), config.cutoff)
                               .real();
    out.reports.push_back(VerificationReport::make("kernel_base_point_large_t", model.name(),
                                                   at_base, 1.0, 1e-10));

    // partial sums converge: increment bounds d e^{-2t casimir} decrease
    // beyond a model-dependent index, so the series settles
    {
      std::vector<double> bounds;
      for (const auto& w : enumerate_weights(model, config.cutoff))
        bounds.push_back(static_cast<double>(w.dim) *
                         std::exp(-2.0 * t * to_double(w.casimir)));
      std::size_t start = 1;
      while (start < bounds.size() && bounds[start] >= bounds[start - 1]) ++start;
      bool settling = true;
      for (std::size_t i = start; i + 1 < bounds.size(); ++i)
        settling = settling && bounds[i + 1] < bounds[i];
      VerificationReport rep = VerificationReport::make(
          "kernel_partial_sums_settle", model.name(), settling ? 1.0 : 0.0, 1.0, 0.0, true);
      rep.params["first_decrease_index"] = start;
      out.reports.push_back(rep);
    }

    std::vector<std::vector<std::string>> rows{{"theta", "k_t"}};
    for (int i = 0; i <= 64; ++i) {
      const double theta = M_PI * i / 64.0;
      rows.push_back({fmt17(theta),
                      fmt17(kernel_eval(model, t, RadialPoint::compact(theta), config.cutoff)
                                .real())});
    }
    out.csv_files["kernel_" + file_label(model.name()) + "_compact.csv"] = csv_table(rows);
    std::vector<std::vector<std::string>> dual_rows{{"r", "k_t"}};
    for (int i = 0; i <= 60; ++i) {
      const double r = 3.0 * i / 60.0;
      dual_rows.push_back(
          {fmt17(r),
           fmt17(kernel_eval(model, t, RadialPoint::dual(r), config.cutoff).real())});
    }
    out.csv_files["kernel_" + file_label(model.name()) + "_dual.csv"] = csv_table(dual_rows);
  }
  return out;
}

SuiteOutput suite_diagrams(const RunConfig& config) {
  SuiteOutput out;
  Rng suite_rng = Rng(config.seed).fork(0x64696167);  // "diag"
  for (std::size_t ci = 0; ci < config.chains.size(); ++ci) {
    const Chain& chain = config.chains[ci];
    for (std::size_t n = 0; n + 1 < chain.size(); ++n) {
      for (std::size_t span : {std::size_t{1}, std::size_t{2}}) {
        if (n + span >= chain.size()) continue;
        const StageMap map = chain.map_between(n, n + span);
        const auto support = enumerate_weights(map.lower, config.cutoff);
        Rng rng = suite_rng.fork(ci * 1000 + n * 10 + span);
        for (Mode mode : {Mode::Full, Mode::KInvariant}) {
          double max_diagram = 0.0, max_isometry = 0.0;
          for (int trial = 0; trial < 50; ++trial) {
            const CoefficientVector a = random_coefficients(rng, mode, support);
            max_diagram = std::max(max_diagram, check_diagram(map, a).computed);
            const double l2_in = l2_norm(map.lower, a);
            const double l2_out = l2_norm(
                map.upper, mode == Mode::Full ? gamma_embed(map, a) : eta_embed(map, a));
            if (l2_in > 0.0)
              max_isometry = std::max(max_isometry, std::abs(l2_out - l2_in) / l2_in);
            const double fock_in = fock_norm(map.lower, chain.t(), a);
            const double fock_out =
                fock_norm(map.upper, chain.t(),
                          mode == Mode::Full ? delta_embed(map, a) : phi_embed(map, a));
            if (fock_in > 0.0)
              max_isometry = std::max(max_isometry, std::abs(fock_out - fock_in) / fock_in);
          }
          const std::string pair = map.lower.name() + "->" + map.upper.name();
          VerificationReport diag = VerificationReport::make("diagram_commutes", pair,
                                                             max_diagram, 0.0, 1e-13, true);
          diag.params["mode"] = mode == Mode::Full ? "full" : "k_invariant";
          diag.params["t"] = chain.t();
          out.reports.push_back(diag);
          VerificationReport iso = VerificationReport::make("embedding_isometry", pair,
                                                            max_isometry, 0.0, 1e-12, true);
          iso.params["mode"] = mode == Mode::Full ? "full" : "k_invariant";
          out.reports.push_back(iso);
        }
      }
      // functoriality across a two-step composition
      if (n + 2 < chain.size()) {
        const StageMap direct = chain.map_between(n, n + 2);
        const StageMap first = chain.map_between(n, n + 1);
        const StageMap second = chain.map_between(n + 1, n + 2);
        Rng rng = suite_rng.fork(ci * 1000 + n * 10 + 7);
        const auto support = enumerate_weights(direct.lower, config.cutoff);
        double max_dev = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
          const CoefficientVector a = random_coefficients(rng, Mode::Full, support);
          const CoefficientVector via = gamma_embed(second, gamma_embed(first, a));
          const CoefficientVector straight = gamma_embed(direct, a);
          for (const auto& [xi, block] : via.entries) {
            const Block& sb = straight.entries.at(xi);
            for (std::size_t c = 0; c < block.size(); ++c) {
              const double scale = std::max(std::abs(block[c]), std::abs(sb[c]));
              if (scale > 0.0)
                max_dev = std::max(max_dev, std::abs(block[c] - sb[c]) / scale);
            }
          }
        }
        VerificationReport rep = VerificationReport::make(
            "embedding_functorial",
            chain.stage(n).name() + "->" + chain.stage(n + 2).name(), max_dev, 0.0, 1e-13,
            true);
        out.reports.push_back(rep);
      }
    }
  }
  if (config.chains.empty())
    out.reports.push_back(skipped_report("diagrams", "-", "no chains configured"));
  return out;
}

SuiteOutput suite_limits(const RunConfig& config) {
  SuiteOutput out;
  Rng suite_rng = Rng(config.seed).fork(0x6c696d73);  // "lims"
  for (std::size_t ci = 0; ci < config.chains.size(); ++ci) {
    const Chain& chain = config.chains[ci];
    const double t = chain.t();
    Rng rng = suite_rng.fork(ci);
    for (Mode mode : {Mode::Full, Mode::KInvariant}) {
      const auto support = enumerate_weights(chain.stage(0), config.cutoff);
      bool well_defined = true, norms_ok = true, equality_ok = true;
      for (int trial = 0; trial < 20; ++trial) {
        LimitElement x{0, LimitSide::Plancherel, random_coefficients(rng, mode, support)};
        for (std::size_t m = 1; m < chain.size(); ++m) {
          const LimitElement a = limit_heat_apply(chain, t, embed_to_stage(chain, x, m));
          const LimitElement b = embed_to_stage(chain, limit_heat_apply(chain, t, x), m);
          well_defined = well_defined && limit_equal(chain, a, b, 1e-12);
          equality_ok = equality_ok && limit_equal(chain, x, embed_to_stage(chain, x, m));
        }
        // the representing stage must not matter for the Fock norm
        const double l2 = l2_norm(chain.stage(0), x.coefficients);
        const LimitElement hx = limit_heat_apply(chain, t, x);
        for (std::size_t m = 0; m < chain.size(); ++m) {
          const LimitElement hm = embed_to_stage(chain, hx, m);
          const double fock = fock_norm(chain.stage(m), t, hm.coefficients);
          norms_ok = norms_ok && std::abs(fock - l2) <= 1e-12 * std::max(l2, 1.0);
        }
      }
      const std::string label = chain.stage(0).name() + "..." +
                                chain.stage(chain.size() - 1).name();
      VerificationReport wd = VerificationReport::make("limit_heat_well_defined", label,
                                                       well_defined ? 1.0 : 0.0, 1.0, 0.0,
                                                       true);
      wd.params["mode"] = mode == Mode::Full ? "full" : "k_invariant";
      wd.params["t"] = t;
      out.reports.push_back(wd);
      VerificationReport nrm = VerificationReport::make("limit_norms_preserved", label,
                                                        norms_ok ? 1.0 : 0.0, 1.0, 0.0, true);
      nrm.params["mode"] = mode == Mode::Full ? "full" : "k_invariant";
      out.reports.push_back(nrm);
      VerificationReport eq = VerificationReport::make("limit_equality_stable", label,
                                                       equality_ok ? 1.0 : 0.0, 1.0, 0.0,
                                                       true);
      eq.params["mode"] = mode == Mode::Full ? "full" : "k_invariant";
      out.reports.push_back(eq);
    }
  }
  if (config.chains.empty())
    out.reports.push_back(skipped_report("limits", "-", "no chains configured"));
  return out;
}

SuiteOutput run_suite(const std::string& name, const RunConfig& config) {
  if (name == "lattice") return suite_lattice(config);
  if (name == "schur") return suite_schur(config);
  if (name == "plancherel") return suite_plancherel(config);
  if (name == "heat_identity") return suite_heat_identity(config);
  if (name == "fock_inner") return suite_fock_inner(config);
  if (name == "kernel") return suite_kernel(config);
  if (name == "diagrams") return suite_diagrams(config);
  if (name == "limits") return suite_limits(config);
  throw std::logic_error("unknown suite " + name);
}

}  // namespace

std::string csv_table(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::string field = row[i];
      if (field.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : field) {
          quoted += c;
          if (c == '"') quoted += '"';
        }
        quoted += '"';
        field = std::move(quoted);
      }
      out += field;
      if (i + 1 < row.size()) out += ',';
    }
    out += "\r\n";
  }
  return out;
}

RunResult run(const RunConfig& config) {
  RunResult result;
  std::vector<std::future<SuiteOutput>> futures;
  futures.reserve(config.suites.size());
  for (const std::string& name : config.suites)
    futures.push_back(std::async(std::launch::async,
                                 [&config, name]() { return run_suite(name, config); }));

  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  int total = 0, passed = 0, failed = 0, skipped = 0;
  for (std::size_t i = 0; i < futures.size(); ++i) {
    SuiteOutput output;
    nlohmann::ordered_json suite_json;
    suite_json["suite"] = config.suites[i];
    try {
      output = futures[i].get();
    } catch (const std::exception& e) {
      VerificationReport rep;
      rep.identity = config.suites[i] + "_error";
      rep.model = "-";
      rep.passed = false;
      rep.params["error"] = e.what();
      output.reports.push_back(rep);
    }
    int s_total = 0, s_passed = 0, s_failed = 0, s_skipped = 0;
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    for (const auto& rep : output.reports) {
      reports.push_back(report_to_json(rep));
      ++s_total;
      if (rep.params.contains("skipped"))
        ++s_skipped;
      else if (rep.passed)
        ++s_passed;
      else
        ++s_failed;
    }
    suite_json["reports"] = std::move(reports);
    suite_json["summary"] = {{"total", s_total},
                             {"passed", s_passed},
                             {"failed", s_failed},
                             {"skipped", s_skipped}};
    suites.push_back(std::move(suite_json));
    total += s_total;
    passed += s_passed;
    failed += s_failed;
    skipped += s_skipped;
    for (auto& [name, contents] : output.csv_files)
      result.csv_files[name] = std::move(contents);
  }

  result.report["schema"] = 1;
  result.report["seed"] = config.seed;
  result.report["suites"] = std::move(suites);
  result.report["summary"] = {{"total", total},
                              {"passed", passed},
                              {"failed", failed},
                              {"skipped", skipped},
                              {"all_passed", failed == 0}};
  result.exit_status = failed == 0 ? 0 : 1;
  return result;
}

nlohmann::ordered_json transform(const RunConfig& config, const nlohmann::json& input) {
  const std::string type = input.value("type", "coefficients");
  if (!input.contains("model")) throw config_error("input.model", "missing model descriptor");
  const SymmetricSpaceModel model = model_from_json(input["model"], "input.model");
  const double t = input.value("t", config.t_values.empty() ? 0.1 : config.t_values.front());
  if (!(t > 0.0)) throw config_error("input.t", "t must be positive");

  CoefficientVector coefficients;
  if (type == "coefficients") {
    coefficients = coefficients_from_json(model, input.at("coefficients"));
  } else if (type == "grid") {
    if (!supports_spherical_eval(model))
      throw capability_error("transform: grid input needs spherical functions, got " +
                             model.name());
    const auto thetas = input.at("theta").get<std::vector<double>>();
    const auto values = input.at("values").get<std::vector<double>>();
    if (thetas.size() != values.size() || thetas.size() < 2)
      throw config_error("input.theta", "need matching theta/values arrays with >= 2 samples");
    if (!std::is_sorted(thetas.begin(), thetas.end()))
      throw config_error("input.theta", "sample angles must be sorted");
    auto f = [&](double x) {
      if (x <= thetas.front()) return values.front();
      if (x >= thetas.back()) return values.back();
      const auto it = std::upper_bound(thetas.begin(), thetas.end(), x);
      const std::size_t hi = it - thetas.begin();
      const double w = (x - thetas[hi - 1]) / (thetas[hi] - thetas[hi - 1]);
      return (1.0 - w) * values[hi - 1] + w * values[hi];
    };
    const Rat cutoff =
        input.contains("cutoff") ? rat_from_json(input["cutoff"], "input.cutoff")
                                 : config.cutoff;
    coefficients.mode = Mode::KInvariant;
    for (const SphericalWeight& w : enumerate_weights(model, cutoff)) {
      const double coeff = integrate_radial_compact(
          model, [&](double theta) { return f(theta) * spherical_eval(model, w, theta); },
          config.quadrature);
      coefficients.set_scalar(w.xi, Complex{coeff, 0.0});
    }
  } else {
    throw config_error("input.type", "expected 'coefficients' or 'grid'");
  }

  const CoefficientVector transformed = heat_apply(model, t, coefficients);
  const double in_norm = l2_norm(model, coefficients);
  const double out_norm = fock_norm(model, t, transformed);
  const double agreement =
      in_norm > 0.0 ? std::abs(out_norm - in_norm) / in_norm : std::abs(out_norm);

  nlohmann::ordered_json out;
  out["schema"] = 1;
  out["model"] = model.name();
  out["t"] = t;
  out["coefficients"] = coefficients_to_json(transformed);
  out["l2_norm_in"] = in_norm;
  out["fock_norm_out"] = out_norm;
  out["norm_agreement_rel"] = agreement;
  out["passed"] = agreement < 1e-10;
  return out;
}

namespace {

nlohmann::json load_json(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw config_error(what, "cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw config_error(what, std::string("JSON parse failure: ") + e.what());
  }
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
}

}  // namespace

int main_entry(int argc, char** argv) {
  CLI::App app{"heat transforms, Fock norms and direct-limit embeddings on compact "
               "symmetric spaces"};
  app.require_subcommand(1);

  std::string config_path, out_override, input_path, format = "json";
  std::vector<std::string> suite_override;
  std::uint64_t seed_override = 0;
  bool seed_given = false;

  CLI::App* run_cmd = app.add_subcommand("run", "run verification suites from a JSON config");
  run_cmd->add_option("--config", config_path, "path to the run configuration")->required();
  run_cmd->add_option("--suite", suite_override, "suite name(s), overriding the config");
  run_cmd->add_option("--out", out_override, "report path, overriding the config");
  run_cmd->add_option("--seed", seed_override, "random seed, overriding the config")
      ->each([&seed_given](const std::string&) { seed_given = true; });
  run_cmd->add_option("--format", format, "json, or csv to also emit plot tables")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* tr_cmd = app.add_subcommand("transform", "apply the heat transform to an input");
  tr_cmd->add_option("--config", config_path, "path to the run configuration")->required();
  tr_cmd->add_option("--input", input_path, "coefficient vector or zonal grid JSON")
      ->required();
  tr_cmd->add_option("--out", out_override, "output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    RunConfig config = parse_config(load_json(config_path, "config"));
    if (!suite_override.empty()) {
      config.suites.clear();
      for (const auto& s : suite_override) {
        if (!kSuiteNames.count(s)) throw config_error("--suite", "unknown suite '" + s + "'");
        if (std::find(config.suites.begin(), config.suites.end(), s) == config.suites.end())
          config.suites.push_back(s);
      }
    }
    if (seed_given) config.seed = seed_override;
    if (!out_override.empty()) config.output = out_override;
    config.write_csv = format == "csv";

    if (run_cmd->parsed()) {
      const RunResult result = run(config);
      write_file(config.output, result.report.dump(2) + "\n");
      if (config.write_csv) {
        std::string stem = config.output;
        const auto dot = stem.rfind(".json");
        if (dot != std::string::npos) stem = stem.substr(0, dot);
        for (const auto& [name, contents] : result.csv_files)
          write_file(stem + "_" + name, contents);
      }
      for (const auto& suite : result.report["suites"]) {
        const auto& s = suite["summary"];
        std::cout << suite["suite"].get<std::string>() << ": passed "
                  << s["passed"].get<int>() << "/" << s["total"].get<int>();
        if (s["skipped"].get<int>() > 0) std::cout << " (skipped " << s["skipped"].get<int>() << ")";
        std::cout << "\n";
      }
      const auto& s = result.report["summary"];
      std::cout << (s["all_passed"].get<bool>() ? "ALL PASSED" : "FAILURES PRESENT") << " ("
                << s["passed"].get<int>() << "/" << s["total"].get<int>() << " checks)\n";
      return result.exit_status;
    }

    const nlohmann::ordered_json out = transform(config, load_json(input_path, "input"));
    if (out_override.empty())
      std::cout << out.dump(2) << "\n";
    else
      write_file(out_override, out.dump(2) + "\n");
    return out["passed"].get<bool>() ? 0 : 1;
  } catch (const config_error& e) {
    std::cerr << "config error at " << e.where() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace symheat::cli
