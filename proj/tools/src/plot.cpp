#include "qbatt_cli/plot.hpp"

#include <sstream>

namespace qbatt::cli {

std::string plot_script(const Preset& preset, const std::string& csv_path) {
  const bool energy_panel = preset.ylabel.find("ΔE") != std::string::npos;
  const bool markov = !preset.curves.empty() &&
                      preset.curves.front().config.scenario !=
                          Scenario::Nonmarkov;

  std::ostringstream os;
  os << "# gnuplot script generated for preset " << preset.name << "\n";
  os << "set datafile separator \",\"\n";
  os << "set key autotitle columnhead\n";
  os << "set grid\n";
  os << "set xlabel \"" << preset.xlabel << "\"\n";
  os << "set ylabel \"" << preset.ylabel << "\"\n";
  if (energy_panel) {
    // Columns 6/7 are |dEA| and dEB.
    os << "plot \"" << csv_path << "\" using 1:6 with lines title \"|ΔE_A|\", \\\n"
       << "     \"" << csv_path << "\" using 1:7 with lines title \"ΔE_B\"\n";
  } else {
    const int col = markov ? 10 : 9;  // ergotropy_norm
    os << "plot \"" << csv_path << "\" using 1:" << col
       << " with lines title \"W/W_max\"\n";
  }
  os << "pause -1 \"press enter to close\"\n";
  return os.str();
}

}  // namespace qbatt::cli
