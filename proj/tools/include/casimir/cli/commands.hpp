#pragma once

#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "casimir/cli/config.hpp"

namespace casimir::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitDomain = 3,
  kExitVerification = 4,
};

struct CommandOutput {
  std::vector<std::filesystem::path> files;
  std::string message;  // printed to stdout by the front end
  int exit_code = kExitOk;
};

/// y, g, omega, omega_plus, omega_minus over the grid.
CommandOutput cmd_spectrum(const RunConfig& config);

/// y, E_vac, F_casimir, F_lifshitz, F_finite_diff[, F_oracle] over the grid.
CommandOutput cmd_force_curve(const RunConfig& config, bool with_oracle);

/// y, beta_1p, beta_1m, N_mean, c0 over the grid, plus the pair distribution
/// n, c_n, c_n_squared at vacuum.pair_y and a JSON summary carrying the tail.
CommandOutput cmd_vacuum_content(const RunConfig& config);

/// JSON verification report of the truncated-Fock oracle against the closed
/// forms. exit_code is kExitVerification when the report does not pass.
CommandOutput cmd_oracle_check(const RunConfig& config);

/// t, y, p_y, F, E_vac, E_total. exit_code is kExitDomain when the
/// trajectory left the coupling domain (the partial file is still written).
CommandOutput cmd_evolve(const RunConfig& config);

/// t, x1, x2, y, p1, p2, p_y, H for the full classical model.
CommandOutput cmd_classical(const RunConfig& config);

/// Ideal-conductor plate formula F/A = -(π²/240) ħc / y⁴.
struct ReferenceCasimir {
  double y = 0.0;
  double hbar = 0.0;
  double c = 0.0;
  double coefficient = 0.0;  // π²/240
  double pressure = 0.0;     // force per unit area
  std::optional<double> area;
  std::optional<double> force;
};

/// Throws Error{NonpositiveSeparation} for y <= 0.
ReferenceCasimir reference_casimir(double y, double hbar, double c, std::optional<double> area);
std::string format_reference_report(const ReferenceCasimir& result);

/// Central difference -[E(y+h) - E(y-h)]/2h of the vacuum energy, switching
/// to the second-order one-sided stencil within h of a domain edge.
double finite_difference_force(const ValidatedModel& model, double y, double h);

/// Output directory after applying the environment override.
std::filesystem::path resolve_output_directory(const RunConfig& config);

/// Maps an exception thrown by a command to the documented exit code.
int exit_code_for(const std::exception& error) noexcept;

}  // namespace casimir::cli
