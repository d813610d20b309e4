#include "qbatt_cli/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qbatt/lindblad.hpp"
#include "qbatt/nonmarkov.hpp"

namespace qbatt::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
  throw ConfigError("config: " + msg);
}

const json& member(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    fail(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

double number(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_number()) {
    fail(std::string("field \"") + key + "\" must be a number");
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    fail(std::string("field \"") + key + "\" must be finite");
  }
  return x;
}

double number_or(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) {
    return fallback;
  }
  return number(j, key);
}

std::complex<double> complex_number(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
      !v[1].is_number()) {
    fail(std::string("field \"") + key + "\" must be [re, im]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

NonmarkovInitial parse_nonmarkov_initial(const json& j) {
  NonmarkovInitial init;
  const std::string type = member(j, "type").get<std::string>();
  if (type == "amplitudes") {
    init.kind = NonmarkovInitial::Kind::Amplitudes;
    init.nu1 = complex_number(j, "nu1");
    init.nu2 = complex_number(j, "nu2");
    const double norm = std::norm(init.nu1) + std::norm(init.nu2);
    if (std::abs(norm - 1.0) > 1e-9) {
      std::ostringstream os;
      os << "initial amplitudes have weight " << norm << ", want 1";
      fail(os.str());
    }
  } else if (type == "subradiant_mix") {
    init.kind = NonmarkovInitial::Kind::SubradiantMix;
    init.alpha_minus = number(j, "alpha_minus");
    if (!(init.alpha_minus >= -1.0 && init.alpha_minus <= 1.0)) {
      fail("alpha_minus must lie in [-1, 1]");
    }
  } else {
    fail("initial type \"" + type +
         "\" unknown (want amplitudes or subradiant_mix)");
  }
  return init;
}

MarkovInitial parse_markov_initial(const json& j) {
  MarkovInitial init;
  const std::string type = member(j, "type").get<std::string>();
  if (type == "ground") {
    init.kind = MarkovInitial::Kind::Ground;
  } else if (type == "charger_excited") {
    init.kind = MarkovInitial::Kind::ChargerExcited;
  } else if (type == "subradiant") {
    init.kind = MarkovInitial::Kind::Subradiant;
    init.c1 = number(j, "c1");
  } else if (type == "entangled") {
    init.kind = MarkovInitial::Kind::Entangled;
    init.c1 = number(j, "c1");
    init.alpha_minus = number(j, "alpha_minus");
    if (!(init.alpha_minus >= -1.0 && init.alpha_minus <= 1.0)) {
      fail("alpha_minus must lie in [-1, 1]");
    }
  } else {
    fail("initial type \"" + type +
         "\" unknown (want ground, charger_excited, subradiant or entangled)");
  }
  if ((init.kind == MarkovInitial::Kind::Subradiant ||
       init.kind == MarkovInitial::Kind::Entangled) &&
      !(init.c1 >= 0.0 && init.c1 <= 1.0)) {
    fail("c1 must lie in [0, 1]");
  }
  return init;
}

GridSpec parse_grid(const json& j) {
  GridSpec g;
  g.t_min = number(j, "t_min");
  g.t_max = number(j, "t_max");
  const json& np = member(j, "n_points");
  if (!np.is_number_integer()) {
    fail("grid n_points must be an integer");
  }
  g.n_points = np.get<int>();
  if (g.t_min < 0.0) {
    fail("grid t_min must be non-negative");
  }
  if (!(g.t_max > g.t_min)) {
    fail("grid t_max must exceed t_min");
  }
  if (g.n_points < 2) {
    fail("grid needs at least 2 points");
  }
  return g;
}

json initial_to_json(const NonmarkovInitial& init) {
  json j;
  if (init.kind == NonmarkovInitial::Kind::Amplitudes) {
    j["type"] = "amplitudes";
    j["nu1"] = {init.nu1.real(), init.nu1.imag()};
    j["nu2"] = {init.nu2.real(), init.nu2.imag()};
  } else {
    j["type"] = "subradiant_mix";
    j["alpha_minus"] = init.alpha_minus;
  }
  return j;
}

json initial_to_json(const MarkovInitial& init) {
  json j;
  switch (init.kind) {
    case MarkovInitial::Kind::Ground:
      j["type"] = "ground";
      break;
    case MarkovInitial::Kind::ChargerExcited:
      j["type"] = "charger_excited";
      break;
    case MarkovInitial::Kind::Subradiant:
      j["type"] = "subradiant";
      j["c1"] = init.c1;
      break;
    case MarkovInitial::Kind::Entangled:
      j["type"] = "entangled";
      j["c1"] = init.c1;
      j["alpha_minus"] = init.alpha_minus;
      break;
  }
  return j;
}

}  // namespace

std::string scenario_name(Scenario s) {
  switch (s) {
    case Scenario::Nonmarkov:
      return "nonmarkov";
    case Scenario::MarkovSingleCell:
      return "markov_single_cell";
    case Scenario::MarkovTwoCell:
      return "markov_two_cell";
  }
  return "?";
}

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) {
    fail("top level must be an object");
  }
  const json& sv = member(j, "schema_version");
  if (!sv.is_number_integer() || sv.get<int>() != kSchemaVersion) {
    std::ostringstream os;
    os << "schema_version must be " << kSchemaVersion;
    fail(os.str());
  }

  RunConfig c;
  const std::string scenario = member(j, "scenario").get<std::string>();
  const json& p = member(j, "parameters");

  if (scenario == "nonmarkov") {
    c.scenario = Scenario::Nonmarkov;
    NonmarkovSettings s;
    s.lambda = number(p, "lambda");
    s.rabi = number(p, "rabi");
    s.c1 = number(p, "c1");
    s.initial = parse_nonmarkov_initial(member(p, "initial"));
    // Let the core types veto bad values with their own messages.
    try {
      nonmarkov::LorentzianBath bath(s.lambda, s.rabi);
      nonmarkov::CouplingSplit split(s.c1);
      (void)bath;
      (void)split;
    } catch (const Error& e) {
      fail(e.what());
    }
    c.settings = s;
  } else if (scenario == "markov_single_cell" ||
             scenario == "markov_two_cell") {
    c.scenario = scenario == "markov_single_cell" ? Scenario::MarkovSingleCell
                                                  : Scenario::MarkovTwoCell;
    MarkovSettings s;
    s.detuning = number_or(p, "detuning", 0.0);
    s.dipole = number(p, "dipole");
    s.decay = number(p, "decay");
    s.collective_decay = number(p, "collective_decay");
    s.drive1 = number(p, "drive1");
    s.drive2 = number(p, "drive2");
    s.initial = parse_markov_initial(member(p, "initial"));
    lindblad::MarkovParams mp;
    mp.detuning = s.detuning;
    mp.dipole = s.dipole;
    mp.decay = s.decay;
    mp.collective_decay = s.collective_decay;
    mp.drive1 = s.drive1;
    mp.drive2 = s.drive2;
    try {
      mp.validate();
    } catch (const Error& e) {
      fail(e.what());
    }
    c.settings = s;
  } else {
    fail("scenario \"" + scenario +
         "\" unknown (want nonmarkov, markov_single_cell or markov_two_cell)");
  }

  c.grid = parse_grid(member(j, "grid"));
  return c;
}

json config_to_json(const RunConfig& c) {
  json p;
  if (c.scenario == Scenario::Nonmarkov) {
    const auto& s = std::get<NonmarkovSettings>(c.settings);
    p["lambda"] = s.lambda;
    p["rabi"] = s.rabi;
    p["c1"] = s.c1;
    p["initial"] = initial_to_json(s.initial);
  } else {
    const auto& s = std::get<MarkovSettings>(c.settings);
    p["detuning"] = s.detuning;
    p["dipole"] = s.dipole;
    p["decay"] = s.decay;
    p["collective_decay"] = s.collective_decay;
    p["drive1"] = s.drive1;
    p["drive2"] = s.drive2;
    p["initial"] = initial_to_json(s.initial);
  }

  json j;
  j["schema_version"] = kSchemaVersion;
  j["scenario"] = scenario_name(c.scenario);
  j["parameters"] = p;
  j["grid"] = {{"t_min", c.grid.t_min},
               {"t_max", c.grid.t_max},
               {"n_points", c.grid.n_points}};
  return j;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail("cannot open \"" + path + "\"");
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail("\"" + path + "\" is not valid JSON: " + e.what());
  }
  if (j.is_object() && j.contains("config")) {
    return config_from_json(j["config"]);  // manifest round trip
  }
  return config_from_json(j);
}

std::vector<double> grid_times(const GridSpec& grid) {
  std::vector<double> t(static_cast<size_t>(grid.n_points));
  const double span = grid.t_max - grid.t_min;
  for (int i = 0; i < grid.n_points; ++i) {
    t[static_cast<size_t>(i)] =
        grid.t_min + span * static_cast<double>(i) /
                         static_cast<double>(grid.n_points - 1);
  }
  return t;
}

}  // namespace qbatt::cli
