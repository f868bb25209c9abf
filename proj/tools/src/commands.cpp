#include "casimir/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "casimir/cli/output.hpp"
#include "casimir/classical.hpp"
#include "casimir/dynamics.hpp"
#include "casimir/error.hpp"
#include "casimir/fock_oracle.hpp"
#include "casimir/quantum_analytic.hpp"

namespace casimir::cli {

namespace {

ValidatedModel checked_model(const RunConfig& config) {
  check_run_config(config);
  return validate(config.model);
}

double finite_difference_step(const ValidatedModel& model) {
  const CouplingSpec& c = model.coupling();
  return 1e-4 * (c.family == CouplingFamily::Constant ? 1.0 : c.lambda);
}

double relative_error(double reference, double value) {
  const double diff = std::abs(value - reference);
  return reference != 0.0 ? diff / std::abs(reference) : diff;
}

std::string scientific(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3e", value);
  return buffer;
}

}  // namespace

std::filesystem::path resolve_output_directory(const RunConfig& config) {
  if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') return env;
  return config.output.directory;
}

double finite_difference_force(const ValidatedModel& model, double y, double h) {
  const Domain& d = model.domain();
  const auto shift = [&](double at) { return vacuum_energy_shift(model, at); };
  if (d.contains(y - h) && d.contains(y + h)) {
    return -(shift(y + h) - shift(y - h)) / (2.0 * h);
  }
  const double s = d.contains(y + 2.0 * h) ? 1.0 : -1.0;
  const double derivative = s * (-3.0 * shift(y) + 4.0 * shift(y + s * h) - shift(y + s * 2.0 * h)) / (2.0 * h);
  return -derivative;
}

CommandOutput cmd_spectrum(const RunConfig& config) {
  const ValidatedModel model = checked_model(config);
  Table table{{"y", "g", "omega", "omega_plus", "omega_minus"}, {}};
  for (double y : config.grid.values()) {
    const Spectrum s = spectrum(model, y);
    table.rows.push_back({y, coupling_value(model.coupling(), y), s.omega, s.omega_plus, s.omega_minus});
  }
  const auto path = table_path(resolve_output_directory(config), "spectrum", config.output.format);
  write_table(path, table, config.output.format, config.output.precision);
  return {{path}, "wrote " + path.string(), kExitOk};
}

CommandOutput cmd_force_curve(const RunConfig& config, bool with_oracle) {
  const ValidatedModel model = checked_model(config);
  Table table{{"y", "E_vac", "F_casimir", "F_lifshitz", "F_finite_diff"}, {}};
  if (with_oracle) table.columns.push_back("F_oracle");

  const double h = finite_difference_step(model);
  const TruncatedBasis basis(config.oracle.n_max, Sector::EvenParity);
  double worst_routes = 0.0;
  for (double y : config.grid.values()) {
    const double f_cas = casimir_force(model, y);
    const double f_lif = lifshitz_force(model, y);
    worst_routes = std::max(worst_routes, std::abs(f_cas - f_lif) / std::max(std::abs(f_cas), 1e-30));
    std::vector<double> row{y, vacuum_energy(model, y), f_cas, f_lif, finite_difference_force(model, y, h)};
    if (with_oracle) row.push_back(oracle_observables(model, y, basis).force);
    table.rows.push_back(std::move(row));
  }
  const auto path = table_path(resolve_output_directory(config), "force_curve", config.output.format);
  write_table(path, table, config.output.format, config.output.precision);
  return {{path}, "wrote " + path.string() + " (max casimir/lifshitz rel. diff " + scientific(worst_routes) + ")",
          kExitOk};
}

CommandOutput cmd_vacuum_content(const RunConfig& config) {
  const ValidatedModel model = checked_model(config);
  const Branch branch = config.vacuum.branch;
  const std::filesystem::path dir = resolve_output_directory(config);
  const auto& out = config.output;

  Table content{{"y", "beta_1p", "beta_1m", "N_mean", "c0"}, {}};
  for (double y : config.grid.values()) {
    const BogoliubovCoeffs b = bogoliubov_coefficients(model, y);
    const FreeQuanta n = mean_free_quanta(b);
    const VacuumExpansion e = squeezed_vacuum_expansion(b, branch, 0);
    content.rows.push_back({y, b.beta_1p, b.beta_1m, 0.5 * (n.n1 + n.n2), e.c0});
  }
  const auto content_path = table_path(dir, "vacuum_content", out.format);
  write_table(content_path, content, out.format, out.precision);

  const double pair_y = config.vacuum.pair_y.value_or(config.grid.y_min);
  const VacuumExpansion e =
      squeezed_vacuum_expansion(bogoliubov_coefficients(model, pair_y), branch, config.vacuum.pair_n_max);
  Table pairs{{"n", "c_n", "c_n_squared"}, {}};
  for (int n = 0; n <= e.n_max; ++n) {
    const double c = e.coefficients[static_cast<std::size_t>(n)];
    pairs.rows.push_back({static_cast<double>(n), c, c * c});
  }
  const auto pairs_path = table_path(dir, "pair_distribution", out.format);
  write_table(pairs_path, pairs, out.format, out.precision);

  nlohmann::ordered_json summary;
  summary["y"] = pair_y;
  summary["branch"] = branch == Branch::Plus ? "plus" : "minus";
  summary["alpha"] = e.alpha;
  summary["beta"] = e.beta;
  summary["ratio"] = e.ratio;
  summary["c0"] = e.c0;
  summary["N_max"] = e.n_max;
  summary["truncated_norm_sq"] = e.truncated_norm_sq();
  summary["tail"] = e.tail;
  summary["norm_sq_plus_tail"] = e.truncated_norm_sq() + e.tail;
  const auto summary_path = dir / "pair_distribution_summary.json";
  write_text(summary_path, summary.dump(2) + "\n");

  return {{content_path, pairs_path, summary_path},
          "wrote " + content_path.string() + ", " + pairs_path.string() + " (tail " + scientific(e.tail) + ")",
          kExitOk};
}

CommandOutput cmd_oracle_check(const RunConfig& config) {
  const ValidatedModel model = checked_model(config);
  const double y = config.oracle.y.value_or(config.grid.y_min);
  const double tol = config.oracle.convergence_tol;
  const TruncatedBasis basis(config.oracle.n_max, Sector::Full);

  const VacuumObservables analytic = analytic_observables(model, y);
  const double force_analytic = casimir_force(model, y);
  const OracleObservables oracle = oracle_observables(model, y, basis);
  const double h_scale = build_hamiltonian(model, y, basis).matrix.cwiseAbs().maxCoeff();

  const double err_energy = relative_error(analytic.energy, oracle.values.energy);
  const double err_x1x2 = relative_error(analytic.x1x2, oracle.values.x1x2);
  const double err_n = relative_error(analytic.n1, oracle.values.n1);

  const BogoliubovCoeffs coeffs = bogoliubov_coefficients(model, y);
  nlohmann::ordered_json residuals = nlohmann::ordered_json::array();
  std::vector<double> residual_values;
  double ratio = 0.0;
  for (int order : config.oracle.annihilation_orders) {
    if (order > basis.n_max()) continue;
    const VacuumExpansion e = squeezed_vacuum_expansion(coeffs, config.vacuum.branch, order);
    ratio = e.ratio;
    const double r = verify_annihilation(e, basis);
    residual_values.push_back(r);
    residuals.push_back({{"N_max", order}, {"residual", r}});
  }
  nlohmann::ordered_json measured = nlohmann::ordered_json::array();
  for (std::size_t i = 1; i < residual_values.size(); ++i) {
    if (residual_values[i - 1] > 0.0) measured.push_back(residual_values[i] / residual_values[i - 1]);
  }

  const StructureReport structure = ground_state_structure_checks(oracle.ground, ratio);
  const bool converged = oracle.ground.residual_norm < 1e-10 * h_scale;
  const bool pass = err_energy <= tol && err_x1x2 <= tol && err_n <= tol && structure.exchange_symmetric() &&
                    structure.parity_clean() && converged;

  nlohmann::ordered_json report;
  report["y"] = y;
  report["n_max"] = basis.n_max();
  report["E0_analytic"] = analytic.energy;
  report["E0_oracle"] = oracle.values.energy;
  report["rel_err_energy"] = err_energy;
  report["x1x2_analytic"] = analytic.x1x2;
  report["x1x2_oracle"] = oracle.values.x1x2;
  report["rel_err_x1x2"] = err_x1x2;
  report["N_analytic"] = analytic.n1;
  report["N_oracle"] = oracle.values.n1;
  report["rel_err_N"] = err_n;
  report["force_analytic"] = force_analytic;
  report["force_oracle"] = oracle.force;
  report["eigen_residual_norm"] = oracle.ground.residual_norm;
  report["annihilation_residuals"] = residuals;
  report["annihilation_ratio_expected"] = std::abs(ratio);
  report["annihilation_ratio_measured"] = measured;
  report["symmetry_violation"] = structure.symmetry_violation;
  report["odd_parity_mass"] = structure.odd_parity_mass;
  report["max_pair_deviation"] = structure.max_pair_deviation;
  report["tolerance"] = tol;
  report["pass"] = pass;

  const auto path = resolve_output_directory(config) / "oracle_check.json";
  write_text(path, report.dump(2) + "\n");
  std::string message = "wrote " + path.string() + " (rel_err_energy " + scientific(err_energy) + ", " +
                        (pass ? "pass" : "FAIL") + ")";
  return {{path}, std::move(message), pass ? kExitOk : kExitVerification};
}

CommandOutput cmd_evolve(const RunConfig& config) {
  const ValidatedModel model = checked_model(config);
  const Trajectory trajectory = evolve(model, config.dynamics);
  Table table{{"t", "y", "p_y", "F", "E_vac", "E_total"}, {}};
  table.rows.reserve(trajectory.rows.size());
  for (const TrajectoryRow& r : trajectory.rows) {
    table.rows.push_back({r.t, r.y, r.p_y, r.force, r.e_vac, r.e_total});
  }
  const auto path = table_path(resolve_output_directory(config), "trajectory", config.output.format);
  write_table(path, table, config.output.format, config.output.precision);

  const EnergyAudit audit = energy_audit(trajectory);
  std::ostringstream msg;
  msg << "wrote " << path.string() << "\nfinal energy drift: " << scientific(audit.drift_series.back())
      << "\nmax energy drift: " << scientific(audit.max_rel_drift);
  if (model.adiabatic_warning()) msg << "\nwarning: M/m < 100, adiabatic approximation is questionable";
  if (trajectory.exited_domain) {
    msg << "\nDOMAIN_EXIT: trajectory left the coupling domain at t = "
        << format_number(trajectory.rows.back().t, config.output.precision);
  }
  return {{path}, msg.str(), trajectory.exited_domain ? kExitDomain : kExitOk};
}

CommandOutput cmd_classical(const RunConfig& config) {
  const ValidatedModel model = checked_model(config);
  const ClassicalConfig& c = config.classical;
  const ClassicalTrajectory trajectory =
      evolve_classical(model, c.initial, c.dt, c.t_max, {c.order, c.record_every});
  Table table{{"t", "x1", "x2", "y", "p1", "p2", "p_y", "H"}, {}};
  double drift = 0.0;
  const double e0 = trajectory.energies.front();
  for (std::size_t i = 0; i < trajectory.states.size(); ++i) {
    const PhaseState& s = trajectory.states[i];
    table.rows.push_back({s.t, s.x1, s.x2, s.y, s.p1, s.p2, s.p_y, trajectory.energies[i]});
    drift = std::max(drift, std::abs(trajectory.energies[i] - e0) / std::abs(e0));
  }
  const auto path = table_path(resolve_output_directory(config), "classical_trajectory", config.output.format);
  write_table(path, table, config.output.format, config.output.precision);
  std::string message = "wrote " + path.string() + "\nmax energy drift: " + scientific(drift);
  if (trajectory.exited_domain) message += "\nDOMAIN_EXIT: trajectory left the coupling domain";
  return {{path}, std::move(message), trajectory.exited_domain ? kExitDomain : kExitOk};
}

ReferenceCasimir reference_casimir(double y, double hbar, double c, std::optional<double> area) {
  if (!(y > 0.0)) {
    throw Error(ErrorCode::NonpositiveSeparation, "plate separation must be positive");
  }
  ReferenceCasimir r;
  r.y = y;
  r.hbar = hbar;
  r.c = c;
  r.coefficient = std::numbers::pi * std::numbers::pi / 240.0;
  r.pressure = -r.coefficient * hbar * c / std::pow(y, 4);
  if (area) {
    r.area = area;
    r.force = r.pressure * *area;
  }
  return r;
}

std::string format_reference_report(const ReferenceCasimir& r) {
  std::ostringstream os;
  os << "perfect-conductor parallel plates (reference formula, not the oscillator model)\n"
     << "F/A = -(pi^2/240) hbar c / y^4\n"
     << "coefficient: " << format_number(r.coefficient, 17) << '\n'
     << "y: " << format_number(r.y, 17) << '\n'
     << "hbar: " << format_number(r.hbar, 17) << '\n'
     << "c: " << format_number(r.c, 17) << '\n'
     << "pressure: " << format_number(r.pressure, 17) << '\n';
  if (r.force) {
    os << "area: " << format_number(*r.area, 17) << '\n' << "force: " << format_number(*r.force, 17) << '\n';
  }
  return os.str();
}

int exit_code_for(const std::exception& error) noexcept {
  if (dynamic_cast<const ConfigError*>(&error) != nullptr) return kExitConfig;
  if (const auto* e = dynamic_cast<const Error*>(&error)) {
    switch (e->code()) {
      case ErrorCode::DomainError:
      case ErrorCode::DomainExit:
        return kExitDomain;
      case ErrorCode::NoConvergence:
      case ErrorCode::InvalidRatio:
        return kExitVerification;
      default:
        return kExitConfig;
    }
  }
  return 1;
}

}  // namespace casimir::cli
