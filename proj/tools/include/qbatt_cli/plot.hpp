#pragma once

#include <string>

#include "qbatt_cli/presets.hpp"

namespace qbatt::cli {

// Standalone gnuplot script rendering one curve CSV with the preset's axes.
std::string plot_script(const Preset& preset, const std::string& csv_path);

}  // namespace qbatt::cli
