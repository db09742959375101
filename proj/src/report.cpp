#include "symheat/report.hpp"

#include <cmath>

namespace symheat {

VerificationReport VerificationReport::make(std::string identity, std::string model,
                                            double computed, double reference,
                                            double tolerance, bool absolute_comparison) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.model = std::move(model);
  r.computed = computed;
  r.reference = reference;
  r.tolerance = tolerance;
  const double abs_err = std::abs(computed - reference);
  r.rel_error = reference != 0.0 ? abs_err / std::abs(reference) : abs_err;
  r.passed = (absolute_comparison ? abs_err : r.rel_error) <= tolerance;
  if (absolute_comparison) r.params["comparison"] = "absolute";
  return r;
}

nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["model"] = r.model;
  j["params"] = r.params.is_null() ? nlohmann::ordered_json::object() : r.params;
  j["computed"] = r.computed;
  j["reference"] = r.reference;
  j["rel_error"] = r.rel_error;
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  j["quadrature"] = r.quadrature.is_null() ? nlohmann::ordered_json::object() : r.quadrature;
  return j;
}

}  // namespace symheat
