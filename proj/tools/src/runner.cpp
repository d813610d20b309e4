#include "qbatt_cli/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qbatt/ergotropy.hpp"
#include "qbatt/lindblad.hpp"
#include "qbatt/nonmarkov.hpp"
#include "qbatt/operators.hpp"

namespace qbatt::cli {

namespace {

using nlohmann::json;

std::vector<std::string> nonmarkov_columns() {
  return {"lambda_tau", "kappa", "nu1_sq",    "nu2_sq",        "dEA",
          "dEA_abs",    "dEB",   "ergotropy", "ergotropy_norm"};
}

std::vector<std::string> markov_columns() {
  return {"tau",     "rho_ee", "rho_eg",    "rho_ge",        "rho_gg",
          "dEA",     "dEA_abs", "dEB",      "ergotropy",     "ergotropy_norm"};
}

Table run_nonmarkov(const NonmarkovSettings& s, const GridSpec& grid) {
  const nonmarkov::LorentzianBath bath(s.lambda, s.rabi);
  const nonmarkov::CouplingSplit split(s.c1);

  // Initial amplitudes, for the energy-change reference.
  std::complex<double> nu01;
  std::complex<double> nu02;
  if (s.initial.kind == NonmarkovInitial::Kind::Amplitudes) {
    nu01 = s.initial.nu1;
    nu02 = s.initial.nu2;
  } else {
    const double am = s.initial.alpha_minus;
    const double ap = std::sqrt((1.0 - am) * (1.0 + am));
    nu01 = split.c2() * am + split.c1() * ap;
    nu02 = -split.c1() * am + split.c2() * ap;
  }

  Table table;
  table.columns = nonmarkov_columns();
  for (double t : grid_times(grid)) {
    const auto state =
        s.initial.kind == NonmarkovInitial::Kind::Amplitudes
            ? nonmarkov::evolve_amplitudes(bath, split, nu01, nu02, t)
            : nonmarkov::evolve_subradiant(bath, split,
                                           s.initial.alpha_minus, t);
    nonmarkov::reduced_states(state);  // enforce state validity on the grid
    const auto de = nonmarkov::energy_changes(state, nu01, nu02);
    const double p2 = std::min(std::norm(state.nu2), 1.0);
    const double w = ergotropy::two_level(p2);
    table.rows.push_back({s.lambda * t, nonmarkov::kappa(bath, t),
                          std::norm(state.nu1), std::norm(state.nu2),
                          de.charger, std::abs(de.charger), de.battery, w,
                          w / kOmega0});
  }
  return table;
}

lindblad::MarkovParams markov_params(const MarkovSettings& s) {
  lindblad::MarkovParams p;
  p.detuning = s.detuning;
  p.dipole = s.dipole;
  p.decay = s.decay;
  p.collective_decay = s.collective_decay;
  p.drive1 = s.drive1;
  p.drive2 = s.drive2;
  return p;
}

linalg::DensityMatrix markov_initial_state(const MarkovInitial& init) {
  switch (init.kind) {
    case MarkovInitial::Kind::Ground:
      return linalg::validate_density_matrix(
          ops::basis_state(ops::kGround).projector());
    case MarkovInitial::Kind::ChargerExcited:
      return linalg::validate_density_matrix(
          ops::basis_state(ops::kChargerExcited).projector());
    case MarkovInitial::Kind::Subradiant:
      return linalg::validate_density_matrix(
          ops::subradiant_state(init.c1).projector());
    case MarkovInitial::Kind::Entangled: {
      const double am = init.alpha_minus;
      const double ap = std::sqrt((1.0 - am) * (1.0 + am));
      const linalg::Vector v =
          am * ops::subradiant_state(init.c1).amplitudes() +
          ap * ops::symmetric_state(init.c1).amplitudes();
      return linalg::validate_density_matrix(
          linalg::PureStateVector(v).projector());
    }
  }
  throw ConfigError("config: unreachable initial state kind");
}

Table run_markov(const MarkovSettings& s, const GridSpec& grid,
                 bool two_cell) {
  const lindblad::Generator gen(markov_params(s));
  const double step = gen.default_step();

  linalg::DensityMatrix rho = markov_initial_state(s.initial);
  const double pa0 =
      (rho.matrix()(0, 0) + rho.matrix()(1, 1)).real();
  const double pb0 =
      (rho.matrix()(0, 0) + rho.matrix()(2, 2)).real();

  Table table;
  table.columns = markov_columns();
  const double w_max = two_cell ? 2.0 * kOmega0 : kOmega0;
  double t_now = 0.0;
  bool first = true;
  for (double t : grid_times(grid)) {
    if (!first || t > 0.0) {
      rho = lindblad::evolve(gen, rho, t - t_now, step);
    }
    first = false;
    t_now = t;
    const auto& r = rho.matrix();
    const double pa = (r(0, 0) + r(1, 1)).real();
    const double pb = (r(0, 0) + r(2, 2)).real();
    const double dea = kOmega0 * (pa - pa0);
    const double deb = kOmega0 * (pb - pb0);
    const double w =
        two_cell ? ergotropy::two_cell(rho) : ergotropy::single_cell(rho);
    table.rows.push_back({t, r(0, 0).real(), r(1, 1).real(), r(2, 2).real(),
                          r(3, 3).real(), dea, std::abs(dea), deb, w,
                          w / w_max});
  }
  return table;
}

std::string format_value(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

json tolerances_json() {
  return json{{"trace", linalg::kTraceTol},
              {"hermiticity", linalg::kHermitianTol},
              {"positivity_floor", linalg::kEigenvalueFloor}};
}

void set_json_path(json& root, const std::string& path, double value) {
  json* node = &root;
  std::istringstream is(path);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(is, part, '.')) {
    if (part.empty()) {
      throw ConfigError("sweep: empty segment in parameter path \"" + path +
                        "\"");
    }
    parts.push_back(part);
  }
  if (parts.empty()) {
    throw ConfigError("sweep: empty parameter path");
  }
  for (size_t i = 0; i + 1 < parts.size(); ++i) {
    if (!node->is_object() || !node->contains(parts[i])) {
      throw ConfigError("sweep: path \"" + path +
                        "\" does not exist in the config");
    }
    node = &(*node)[parts[i]];
  }
  const std::string& leaf = parts.back();
  if (!node->is_object() || !node->contains(leaf) ||
      !(*node)[leaf].is_number()) {
    throw ConfigError("sweep: path \"" + path +
                      "\" must name an existing numeric field");
  }
  (*node)[leaf] = value;
}

}  // namespace

Table run(const RunConfig& config) {
  if (config.scenario == Scenario::Nonmarkov) {
    return run_nonmarkov(std::get<NonmarkovSettings>(config.settings),
                         config.grid);
  }
  return run_markov(std::get<MarkovSettings>(config.settings), config.grid,
                    config.scenario == Scenario::MarkovTwoCell);
}

double integrator_step(const RunConfig& config) {
  if (config.scenario == Scenario::Nonmarkov) {
    return 0.0;
  }
  const lindblad::Generator gen(
      markov_params(std::get<MarkovSettings>(config.settings)));
  return gen.default_step();
}

std::string render_csv(const Table& table) {
  std::string out;
  for (size_t c = 0; c < table.columns.size(); ++c) {
    if (c) {
      out += ',';
    }
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) {
        out += ',';
      }
      out += format_value(row[c]);
    }
    out += '\n';
  }
  return out;
}

json manifest_for(const RunConfig& config, const std::string& csv_name,
                  const std::string& preset_name,
                  const std::string& curve_label) {
  json integrator;
  if (config.scenario == Scenario::Nonmarkov) {
    integrator = {{"method", "closed_form"}};
  } else {
    integrator = {{"method", "rk4"},
                  {"order", 4},
                  {"step", integrator_step(config)}};
  }

  json m;
  m["schema_version"] = kSchemaVersion;
  m["artifact"] = kArtifactName;
  m["artifact_version"] = kArtifactVersion;
  if (!preset_name.empty()) {
    m["preset"] = preset_name;
  }
  if (!curve_label.empty()) {
    m["curve"] = curve_label;
  }
  m["config"] = config_to_json(config);
  m["integrator"] = integrator;
  m["tolerances"] = tolerances_json();
  m["columns"] = config.scenario == Scenario::Nonmarkov ? nonmarkov_columns()
                                                        : markov_columns();
  m["csv"] = csv_name;
  return m;
}

Table run_sweep(const json& base_config, const SweepSpec& sweep) {
  if (sweep.values.empty()) {
    throw ConfigError("sweep: empty values list");
  }

  // Validate everything first; nothing runs if any value is bad.
  std::vector<RunConfig> configs;
  std::ostringstream problems;
  for (size_t i = 0; i < sweep.values.size(); ++i) {
    json j = base_config;
    try {
      set_json_path(j, sweep.param_path, sweep.values[i]);
      configs.push_back(config_from_json(j));
    } catch (const Error& e) {
      problems << "\n  value[" << i << "] = " << format_value(sweep.values[i])
               << ": " << e.what();
    }
  }
  const std::string bad = problems.str();
  if (!bad.empty()) {
    throw ConfigError("sweep: invalid values:" + bad);
  }

  Table out;
  for (size_t i = 0; i < configs.size(); ++i) {
    Table t = run(configs[i]);
    if (out.columns.empty()) {
      out.columns.push_back("sweep_value");
      out.columns.insert(out.columns.end(), t.columns.begin(),
                         t.columns.end());
    }
    for (auto& row : t.rows) {
      std::vector<double> full;
      full.reserve(row.size() + 1);
      full.push_back(sweep.values[i]);
      full.insert(full.end(), row.begin(), row.end());
      out.rows.push_back(std::move(full));
    }
  }
  return out;
}

std::vector<double> parse_values(const std::string& list) {
  std::vector<double> out;
  std::istringstream is(list);
  std::string item;
  while (std::getline(is, item, ',')) {
    size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw ConfigError("sweep: \"" + item + "\" is not a number");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) {
      ++pos;
    }
    if (pos != item.size()) {
      throw ConfigError("sweep: \"" + item + "\" is not a number");
    }
    out.push_back(v);
  }
  if (out.empty()) {
    throw ConfigError("sweep: empty values list");
  }
  return out;
}

int exit_code_for_exception(const std::exception& e) {
  if (dynamic_cast<const ValidationError*>(&e) != nullptr) {
    return 2;
  }
  if (dynamic_cast<const NumericsError*>(&e) != nullptr) {
    return 3;
  }
  if (dynamic_cast<const nlohmann::json::exception*>(&e) != nullptr) {
    return 2;
  }
  return 1;
}

}  // namespace qbatt::cli
