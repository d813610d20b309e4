#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qbatt/errors.hpp"

namespace qbatt::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kArtifactName = "qbatt";
inline constexpr const char* kArtifactVersion = "0.1.0";

// Bad config file, unknown preset, malformed sweep values, ...
class ConfigError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

struct GridSpec {
  double t_min = 0.0;
  double t_max = 1.0;
  int n_points = 2;
};

struct NonmarkovInitial {
  enum class Kind { Amplitudes, SubradiantMix };
  Kind kind = Kind::Amplitudes;
  // Amplitudes: nu1 on |eg>, nu2 on |ge>, |nu1|^2 + |nu2|^2 = 1.
  std::complex<double> nu1{1.0, 0.0};
  std::complex<double> nu2{0.0, 0.0};
  // SubradiantMix: weight on c2|eg> - c1|ge>; the rest is orthogonal.
  double alpha_minus = 0.0;
};

struct NonmarkovSettings {
  double lambda = 1.0;
  double rabi = 0.0;
  double c1 = 0.0;
  NonmarkovInitial initial;
};

struct MarkovInitial {
  enum class Kind { Ground, ChargerExcited, Subradiant, Entangled };
  Kind kind = Kind::Ground;
  double c1 = 0.0;           // Subradiant and Entangled
  double alpha_minus = 0.0;  // Entangled only
};

struct MarkovSettings {
  double detuning = 0.0;
  double dipole = 0.0;
  double decay = 0.0;
  double collective_decay = 0.0;
  double drive1 = 0.0;
  double drive2 = 0.0;
  MarkovInitial initial;
};

enum class Scenario { Nonmarkov, MarkovSingleCell, MarkovTwoCell };

std::string scenario_name(Scenario s);

struct RunConfig {
  Scenario scenario = Scenario::Nonmarkov;
  std::variant<NonmarkovSettings, MarkovSettings> settings =
      NonmarkovSettings{};
  GridSpec grid;
};

// Parse and fully validate (including the core modules' parameter checks).
// Throws ConfigError with a pointed message on any problem.
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& c);

// Reads a config file; a run manifest (which embeds the config under
// "config") is accepted too, so manifests round-trip as configs.
RunConfig load_config_file(const std::string& path);

std::vector<double> grid_times(const GridSpec& grid);

}  // namespace qbatt::cli
