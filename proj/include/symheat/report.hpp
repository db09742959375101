#pragma once

#include <string>

#include "json.hpp"

namespace symheat {

/// Structured pass/fail record of one identity check.
struct VerificationReport {
  std::string identity;
  std::string model;
  nlohmann::ordered_json params;      // identity-specific parameters
  double computed = 0.0;
  double reference = 0.0;
  double rel_error = 0.0;  // |computed - reference| / |reference|, absolute when reference = 0
  double tolerance = 0.0;
  bool passed = false;
  nlohmann::ordered_json quadrature;  // scheme/panels/cutoff/calibration when relevant

  static VerificationReport make(std::string identity, std::string model, double computed,
                                 double reference, double tolerance,
                                 bool absolute_comparison = false);
};

nlohmann::ordered_json report_to_json(const VerificationReport& r);

}  // namespace symheat
