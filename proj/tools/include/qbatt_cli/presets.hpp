#pragma once

#include <string>
#include <vector>

#include "qbatt_cli/config.hpp"

namespace qbatt::cli {

struct PresetCurve {
  std::string label;
  RunConfig config;
};

// A named figure: one or more curves sharing axes.
struct Preset {
  std::string name;
  std::string xlabel;
  std::string ylabel;
  std::vector<PresetCurve> curves;
};

const std::vector<Preset>& all_presets();

// nullptr when the name is unknown.
const Preset* find_preset(const std::string& name);

// "fig2a, fig2b, ..." for error messages.
std::string preset_names();

}  // namespace qbatt::cli
