// Black-box checks of the command-line tool: exit codes, file outputs and
// byte-level determinism.  argv[1] is the path to the built binary.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#ifdef __unix__
#include <sys/wait.h>
#endif

namespace {

namespace fs = std::filesystem;

int g_failures = 0;

void check(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

int run_cmd(const std::string& cmd) {
  const int raw = std::system(cmd.c_str());
#ifdef __unix__
  if (WIFEXITED(raw)) {
    return WEXITSTATUS(raw);
  }
  return -1;
#else
  return raw;
#endif
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

const char* kGoodConfig = R"({
  "schema_version": 1,
  "scenario": "nonmarkov",
  "parameters": {
    "lambda": 1.0,
    "rabi": 30.0,
    "c1": 0.7071067811865476,
    "initial": {"type": "amplitudes", "nu1": [1.0, 0.0], "nu2": [0.0, 0.0]}
  },
  "grid": {"t_min": 0.0, "t_max": 2.0, "n_points": 21}
})";

const char* kBadConfig = R"({
  "schema_version": 1,
  "scenario": "markov_two_cell",
  "parameters": {
    "dipole": 0.5, "decay": 0.3, "collective_decay": 0.4,
    "drive1": 1.0, "drive2": 1.0,
    "initial": {"type": "ground"}
  },
  "grid": {"t_min": 0.0, "t_max": 1.0, "n_points": 5}
})";

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_exit_codes <path-to-binary>\n";
    return 1;
  }
  const std::string bin = std::string("\"") + argv[1] + "\"";
  const fs::path scratch = "e2e_scratch";
  fs::remove_all(scratch);
  fs::create_directories(scratch);
  const std::string quiet = " > e2e_scratch/out.txt 2> e2e_scratch/err.txt";

  write(scratch / "good.json", kGoodConfig);
  write(scratch / "bad.json", kBadConfig);
  write(scratch / "broken.json", "{");

  check(run_cmd(bin + " validate --config e2e_scratch/good.json" + quiet) == 0,
        "validate accepts a good config");
  check(run_cmd(bin + " validate --config e2e_scratch/bad.json" + quiet) == 2,
        "validate rejects a CP-violating config with exit 2");
  check(
      run_cmd(bin + " validate --config e2e_scratch/broken.json" + quiet) == 2,
      "validate rejects broken JSON with exit 2");
  check(run_cmd(bin + " validate --config e2e_scratch/nothere.json" + quiet) ==
            2,
        "validate rejects a missing file with exit 2");

  check(run_cmd(bin + " run-preset fig9z" + quiet) == 2,
        "unknown preset exits 2");
  check(run_cmd(bin + " run-preset fig2a --out-dir e2e_scratch/a" + quiet) ==
            0,
        "run-preset fig2a succeeds");
  check(run_cmd(bin + " run-preset fig2a --out-dir e2e_scratch/b" + quiet) ==
            0,
        "run-preset fig2a succeeds again");

  const fs::path csv_a = scratch / "a" / "fig2a_R500.csv";
  const fs::path csv_b = scratch / "b" / "fig2a_R500.csv";
  const fs::path manifest_a = scratch / "a" / "fig2a_R500.manifest.json";
  check(fs::exists(csv_a) && fs::exists(manifest_a),
        "run-preset writes the curve CSV and its manifest");
  const std::string bytes_a = slurp(csv_a);
  check(!bytes_a.empty() && bytes_a == slurp(csv_b),
        "repeated runs are byte-identical");
  check(bytes_a.rfind("lambda_tau,", 0) == 0,
        "curve CSV starts with the header row");
  check(bytes_a.find('\r') == std::string::npos, "CSV uses LF endings only");

  check(run_cmd(bin + " run --config " + manifest_a.string() +
                " --output e2e_scratch/rerun.csv" + quiet) == 0,
        "run accepts a manifest as its config");
  check(slurp(scratch / "rerun.csv") == bytes_a,
        "manifest-driven rerun reproduces the CSV byte for byte");

  check(run_cmd(bin + " run --config e2e_scratch/good.json --output "
                      "e2e_scratch/direct.csv" +
                quiet) == 0,
        "run accepts a plain config");
  check(slurp(scratch / "direct.csv").rfind("lambda_tau,", 0) == 0,
        "direct run writes the expected table");

  check(run_cmd(bin + " sweep --config e2e_scratch/good.json"
                      " --param parameters.rabi --values 0.3,30"
                      " --output e2e_scratch/sw.csv" +
                quiet) == 0,
        "sweep over rabi succeeds");
  check(slurp(scratch / "sw.csv").rfind("sweep_value,", 0) == 0,
        "sweep CSV leads with the swept value column");
  check(run_cmd(bin + " sweep --config e2e_scratch/good.json"
                      " --param parameters.rabi --values 1,abc" +
                quiet) == 2,
        "malformed sweep values exit 2");
  check(run_cmd(bin + " sweep --config e2e_scratch/good.json"
                      " --param parameters.nope --values 1" +
                quiet) == 2,
        "unknown sweep path exits 2");

  check(run_cmd(bin + " plot-script " + csv_a.string() + " fig2a --output " +
                "e2e_scratch/p.gp" + quiet) == 0,
        "plot-script succeeds for an existing CSV");
  check(slurp(scratch / "p.gp").find("gnuplot") != std::string::npos,
        "plot script mentions gnuplot");
  check(run_cmd(bin + " plot-script e2e_scratch/nothere.csv fig2a" + quiet) ==
            2,
        "plot-script on a missing CSV exits 2");

  check(run_cmd(bin + quiet) == 2, "missing subcommand exits 2");
  check(run_cmd(bin + " frobnicate" + quiet) == 2, "unknown subcommand exits 2");
  check(run_cmd(bin + " --help" + quiet) == 0, "--help exits 0");

  if (g_failures == 0) {
    std::cout << "all command-line checks passed\n";
    return 0;
  }
  std::cerr << g_failures << " command-line check(s) failed\n";
  return 1;
}
