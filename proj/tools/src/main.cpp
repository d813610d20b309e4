#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qbatt_cli/config.hpp"
#include "qbatt_cli/plot.hpp"
#include "qbatt_cli/presets.hpp"
#include "qbatt_cli/runner.hpp"

namespace {

namespace fs = std::filesystem;
using namespace qbatt;

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw cli::ConfigError("cannot write \"" + path.string() + "\"");
  }
  out << content;
}

std::string stem_of(const std::string& path) {
  fs::path p(path);
  std::string stem = p.stem().string();
  // config.manifest.json -> config
  const std::string tail = ".manifest";
  if (stem.size() > tail.size() &&
      stem.compare(stem.size() - tail.size(), tail.size(), tail) == 0) {
    stem.resize(stem.size() - tail.size());
  }
  return stem.empty() ? "run" : stem;
}

int cmd_run_preset(const std::string& name, const std::string& out_dir) {
  const cli::Preset* preset = cli::find_preset(name);
  if (preset == nullptr) {
    throw cli::ConfigError("unknown preset \"" + name + "\" (available: " +
                           cli::preset_names() + ")");
  }
  fs::create_directories(out_dir);

  // Compute everything before writing anything.
  struct Artifact {
    fs::path path;
    std::string content;
  };
  std::vector<Artifact> artifacts;
  for (const auto& curve : preset->curves) {
    const std::string base = preset->name + "_" + curve.label;
    const cli::Table table = cli::run(curve.config);
    const auto manifest =
        cli::manifest_for(curve.config, base + ".csv", preset->name,
                          curve.label);
    artifacts.push_back(
        {fs::path(out_dir) / (base + ".csv"), cli::render_csv(table)});
    artifacts.push_back({fs::path(out_dir) / (base + ".manifest.json"),
                         manifest.dump(2) + "\n"});
  }
  for (const auto& a : artifacts) {
    write_file(a.path, a.content);
    std::cout << a.path.string() << "\n";
  }
  return 0;
}

int cmd_run(const std::string& config_path, std::string output) {
  const cli::RunConfig config = cli::load_config_file(config_path);
  if (output.empty()) {
    output = stem_of(config_path) + ".csv";
  }
  const cli::Table table = cli::run(config);
  const auto manifest =
      cli::manifest_for(config, fs::path(output).filename().string(), "", "");
  write_file(output, cli::render_csv(table));
  const fs::path manifest_path =
      fs::path(output).replace_extension(".manifest.json");
  write_file(manifest_path, manifest.dump(2) + "\n");
  std::cout << output << "\n" << manifest_path.string() << "\n";
  return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& param,
              const std::string& values, std::string output) {
  std::ifstream in(config_path);
  if (!in) {
    throw cli::ConfigError("cannot open \"" + config_path + "\"");
  }
  nlohmann::json base;
  try {
    in >> base;
  } catch (const nlohmann::json::exception& e) {
    throw cli::ConfigError("\"" + config_path +
                           "\" is not valid JSON: " + e.what());
  }
  if (base.is_object() && base.contains("config")) {
    base = base["config"];
  }

  cli::SweepSpec spec;
  spec.param_path = param;
  spec.values = cli::parse_values(values);
  const cli::Table table = cli::run_sweep(base, spec);

  if (output.empty()) {
    output = stem_of(config_path) + "_sweep.csv";
  }
  write_file(output, cli::render_csv(table));
  std::cout << output << "\n";
  return 0;
}

int cmd_plot_script(const std::string& csv_path, const std::string& preset_name,
                    std::string output) {
  if (!fs::exists(csv_path)) {
    throw cli::ConfigError("CSV \"" + csv_path + "\" does not exist");
  }
  const cli::Preset* preset = cli::find_preset(preset_name);
  if (preset == nullptr) {
    throw cli::ConfigError("unknown preset \"" + preset_name +
                           "\" (available: " + cli::preset_names() + ")");
  }
  if (output.empty()) {
    output = csv_path + ".gp";
  }
  write_file(output, cli::plot_script(*preset, csv_path));
  std::cout << output << "\n";
  return 0;
}

int cmd_validate(const std::string& config_path) {
  const cli::RunConfig config = cli::load_config_file(config_path);
  std::cout << "ok: scenario " << cli::scenario_name(config.scenario) << ", "
            << config.grid.n_points << " grid points in ["
            << config.grid.t_min << ", " << config.grid.t_max << "]\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"open quantum battery charging simulator"};
  app.require_subcommand(1);

  auto* run_preset =
      app.add_subcommand("run-preset", "compute a named figure preset");
  std::string preset_name;
  std::string out_dir = ".";
  run_preset->add_option("name", preset_name, "preset name, e.g. fig2a")
      ->required();
  run_preset->add_option("--out-dir", out_dir, "output directory");

  auto* run = app.add_subcommand("run", "compute one config file");
  std::string config_path;
  std::string output;
  run->add_option("--config", config_path, "config or manifest JSON")
      ->required();
  run->add_option("--output", output, "CSV output path");

  auto* sweep =
      app.add_subcommand("sweep", "re-run a config over parameter values");
  std::string sweep_config;
  std::string sweep_param;
  std::string sweep_values;
  std::string sweep_output;
  sweep->add_option("--config", sweep_config, "base config JSON")->required();
  sweep->add_option("--param", sweep_param,
                    "dot path of the swept field, e.g. parameters.rabi")
      ->required();
  sweep->add_option("--values", sweep_values, "comma-separated values")
      ->required();
  sweep->add_option("--output", sweep_output, "CSV output path");

  auto* plot = app.add_subcommand("plot-script",
                                  "emit a gnuplot script for a curve CSV");
  std::string plot_csv;
  std::string plot_preset;
  std::string plot_output;
  plot->add_option("csv", plot_csv, "curve CSV produced by run-preset")
      ->required();
  plot->add_option("preset", plot_preset, "preset the CSV belongs to")
      ->required();
  plot->add_option("--output", plot_output, "script output path");

  auto* validate =
      app.add_subcommand("validate", "check a config file and exit");
  std::string validate_config;
  validate->add_option("--config", validate_config, "config or manifest JSON")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (run_preset->parsed()) {
      return cmd_run_preset(preset_name, out_dir);
    }
    if (run->parsed()) {
      return cmd_run(config_path, output);
    }
    if (sweep->parsed()) {
      return cmd_sweep(sweep_config, sweep_param, sweep_values, sweep_output);
    }
    if (plot->parsed()) {
      return cmd_plot_script(plot_csv, plot_preset, plot_output);
    }
    if (validate->parsed()) {
      return cmd_validate(validate_config);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_code_for_exception(e);
  }
  return 0;
}
