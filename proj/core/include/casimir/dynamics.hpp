#pragma once

#include <string_view>
#include <vector>

#include "casimir/model.hpp"

namespace casimir {

enum class ForceRoute { Casimir, Lifshitz, Oracle };

std::string_view to_string(ForceRoute route) noexcept;
ForceRoute parse_force_route(std::string_view name);

struct DynamicsConfig {
  double y0 = 5.0;
  double v0 = 0.0;
  double dt = 0.1;
  double t_max = 10.0;
  ForceRoute force_route = ForceRoute::Casimir;
  /// Per-mode cutoff used by the oracle route.
  int oracle_n_max = 40;
  /// Projected wall-clock limit for the oracle route, seconds; <= 0 disables.
  double oracle_budget_seconds = 60.0;
};

struct TrajectoryRow {
  double t = 0.0;
  double y = 0.0;
  double p_y = 0.0;
  double force = 0.0;
  double e_vac = 0.0;
  double e_total = 0.0;  // p_y^2/2M + E_vac(y)
};

struct Trajectory {
  std::vector<TrajectoryRow> rows;
  bool exited_domain = false;
};

/// Slow coordinate in the adiabatic vacuum force, M y'' = F(y), integrated
/// with velocity Verlet (one force evaluation per step, reused for the row).
/// Stops at t_max or when y would leave the coupling domain (exited_domain).
/// Throws OracleTooSlow when the oracle route's projected runtime exceeds
/// the configured budget.
Trajectory evolve(const ValidatedModel& model, const DynamicsConfig& config);

struct EnergyAudit {
  double max_rel_drift = 0.0;
  std::vector<double> drift_series;  // |E(t) - E(0)| / |E(0)| per row
};

/// Throws EmptyTrajectory for a trajectory with no rows.
EnergyAudit energy_audit(const Trajectory& trajectory);

}  // namespace casimir
