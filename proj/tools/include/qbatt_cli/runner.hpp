#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qbatt_cli/config.hpp"

namespace qbatt::cli {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Compute the full time series for one config.  Columns:
//   nonmarkov:  lambda_tau, kappa, nu1_sq, nu2_sq, dEA, dEA_abs, dEB,
//               ergotropy, ergotropy_norm
//   markov_*:   tau, rho_ee, rho_eg, rho_ge, rho_gg, dEA, dEA_abs, dEB,
//               ergotropy, ergotropy_norm
// Energies in omega0 units; ergotropy_norm divides by the structural
// maximum (omega0 for single-cell, 2 omega0 for two-cell).
Table run(const RunConfig& config);

// Integrator step the markov scenarios will use; 0 for closed-form runs.
double integrator_step(const RunConfig& config);

// Comma-separated, header row, 12 significant digits, LF endings.
std::string render_csv(const Table& table);

// Machine-readable record of one run; feeding it back through
// load_config_file reproduces the CSV byte for byte.
nlohmann::json manifest_for(const RunConfig& config,
                            const std::string& csv_name,
                            const std::string& preset_name,
                            const std::string& curve_label);

struct SweepSpec {
  std::string param_path;  // dot path into the config JSON, e.g. "parameters.rabi"
  std::vector<double> values;
};

// One row per (sweep value, grid point); first column is the swept value.
// Every value is validated before anything runs; a bad one aborts the whole
// sweep with a ConfigError listing the offenders.
Table run_sweep(const nlohmann::json& base_config, const SweepSpec& sweep);

// Parse "0.3,30,500" into doubles; ConfigError on junk or emptiness.
std::vector<double> parse_values(const std::string& list);

// 0 would be success; validation failures map to 2, broken numerical
// invariants during a run to 3, anything else to 1.
int exit_code_for_exception(const std::exception& e);

}  // namespace qbatt::cli
