#pragma once

// Batch driver behind the command-line tool: parse a JSON run
// configuration, execute the selected verification suites in a worker
// pool, and assemble the deterministic report (plus optional plot CSVs).

#include "symheat/direct_limit.hpp"
#include "symheat/quadrature.hpp"
#include "symheat/report.hpp"
#include "symheat/space_models.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace symheat::cli {

struct RunConfig {
  std::vector<SymmetricSpaceModel> models;
  std::vector<Chain> chains;
  std::vector<double> t_values{0.01, 0.1, 1.0};
  Rat cutoff{40};
  std::vector<std::string> suites;
  QuadratureSpec quadrature;
  bool quadrature_cutoff_overridden = false;
  std::uint64_t seed = 1;
  std::string output = "report.json";
  bool write_csv = false;
};

/// Parses and validates a configuration. Throws config_error with a path
/// pointer into the offending entry.
RunConfig parse_config(const nlohmann::json& j);

struct RunResult {
  int exit_status = 0;  // 0 iff every executed check passed
  nlohmann::ordered_json report;
  std::map<std::string, std::string> csv_files;  // file name -> contents
};

/// Executes the selected suites. Suites run concurrently; reports are
/// merged in configuration order, so the result is deterministic for a
/// fixed config and seed.
RunResult run(const RunConfig& config);

/// The user-facing heat transform: input is either a coefficient vector
/// or a zonal sample grid (Fourier inversion by quadrature first). Returns
/// the transformed coefficients together with the L2-in / Fock-out norm
/// pair, which must agree to 1e-10 relative.
nlohmann::ordered_json transform(const RunConfig& config, const nlohmann::json& input);

/// Full command-line entry point (subcommands `run` and `transform`).
int main_entry(int argc, char** argv);

/// RFC-4180 CSV assembly helper (quotes fields containing separators).
std::string csv_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace symheat::cli
