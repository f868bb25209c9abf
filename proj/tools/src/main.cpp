#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "casimir/cli/commands.hpp"
#include "casimir/cli/config.hpp"
#include "casimir/dynamics.hpp"

using namespace casimir::cli;

namespace {

struct Overrides {
  std::string config_path;
  std::optional<std::string> output_dir;
  std::optional<int> precision;
  std::optional<std::string> format;
};

void add_common(CLI::App* sub, Overrides& o) {
  sub->add_option("-c,--config", o.config_path, "Run configuration (JSON)")->required()->check(CLI::ExistingFile);
  sub->add_option("-o,--output-dir", o.output_dir, "Output directory (same effect as CASIMIR_LAB_OUTPUT_DIR)");
  sub->add_option("--precision", o.precision, "Significant digits in emitted numbers, 6..17");
  sub->add_option("--format", o.format, "Table format: csv or json");
}

RunConfig load(const Overrides& o) {
  RunConfig config = load_run_config(o.config_path);
  if (o.precision) config.output.precision = *o.precision;
  if (o.format) {
    if (*o.format == "csv") {
      config.output.format = OutputFormat::Csv;
    } else if (*o.format == "json") {
      config.output.format = OutputFormat::Json;
    } else {
      throw ConfigError("output.format", "expected 'csv' or 'json'");
    }
  }
  if (o.output_dir) ::setenv(kOutputDirEnv, o.output_dir->c_str(), 1);
  return config;
}

int report(const CommandOutput& out) {
  std::cout << out.message << '\n';
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"casimir_lab: vacuum forces in a three-degree-of-freedom oscillator model"};
  app.require_subcommand(1);

  Overrides o;
  bool with_oracle = false;
  std::optional<double> pair_y;
  std::optional<std::string> branch;
  std::optional<int> oracle_n_max;
  std::optional<double> oracle_y;
  std::optional<std::string> force_route;
  std::optional<double> t_max;
  std::optional<double> dt;
  double ref_y = 0.0;
  double ref_c = 2.99792458e8;
  double ref_hbar = 1.054571817e-34;
  std::optional<double> ref_area;

  auto* spectrum = app.add_subcommand("spectrum", "Normal-mode frequencies over the y grid");
  add_common(spectrum, o);

  auto* force_curve = app.add_subcommand("force-curve", "Vacuum energy and force by every route");
  add_common(force_curve, o);
  force_curve->add_flag("--with-oracle", with_oracle, "Add an F_oracle column from truncated-Fock diagonalization");

  auto* vacuum = app.add_subcommand("vacuum-content", "Bogoliubov coefficients, free quanta, pair expansion");
  add_common(vacuum, o);
  vacuum->add_option("--pair-y", pair_y, "y at which the pair distribution is written");
  vacuum->add_option("--branch", branch, "plus or minus");

  auto* oracle = app.add_subcommand("oracle-check", "Brute-force verification report (JSON)");
  add_common(oracle, o);
  oracle->add_option("--n-max", oracle_n_max, "Per-mode occupation cutoff");
  oracle->add_option("--y", oracle_y, "Slow-coordinate value");

  auto* evolve = app.add_subcommand("evolve", "Semiclassical trajectory of y under the vacuum force");
  add_common(evolve, o);
  evolve->add_option("--force-route", force_route, "casimir, lifshitz or oracle");
  evolve->add_option("--t-max", t_max, "Integration horizon");
  evolve->add_option("--dt", dt, "Time step");

  auto* classical = app.add_subcommand("classical", "Full classical trajectory of (x1, x2, y)");
  add_common(classical, o);

  auto* reference = app.add_subcommand("reference-casimir", "Perfect-conductor plate formula");
  reference->add_option("--y", ref_y, "Plate separation")->required();
  reference->add_option("--c", ref_c, "Speed of light (default SI)");
  reference->add_option("--hbar", ref_hbar, "Reduced Planck constant (default SI)");
  reference->add_option("--area", ref_area, "Plate area; adds the total force");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*reference) {
      std::cout << format_reference_report(reference_casimir(ref_y, ref_hbar, ref_c, ref_area));
      return kExitOk;
    }
    RunConfig config = load(o);
    if (*spectrum) return report(cmd_spectrum(config));
    if (*force_curve) return report(cmd_force_curve(config, with_oracle));
    if (*vacuum) {
      if (pair_y) config.vacuum.pair_y = pair_y;
      if (branch) {
        if (*branch != "plus" && *branch != "minus") throw ConfigError("vacuum.branch", "expected plus or minus");
        config.vacuum.branch = *branch == "plus" ? casimir::Branch::Plus : casimir::Branch::Minus;
      }
      return report(cmd_vacuum_content(config));
    }
    if (*oracle) {
      if (oracle_n_max) config.oracle.n_max = *oracle_n_max;
      if (oracle_y) config.oracle.y = oracle_y;
      return report(cmd_oracle_check(config));
    }
    if (*evolve) {
      if (force_route) {
        try {
          config.dynamics.force_route = casimir::parse_force_route(*force_route);
        } catch (const std::exception& e) {
          throw ConfigError("dynamics.force_route", e.what());
        }
      }
      if (t_max) config.dynamics.t_max = *t_max;
      if (dt) config.dynamics.dt = *dt;
      return report(cmd_evolve(config));
    }
    if (*classical) return report(cmd_classical(config));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitOk;
}
