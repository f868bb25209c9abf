#include "casimir/dynamics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <string>

#include "casimir/error.hpp"
#include "casimir/fock_oracle.hpp"
#include "casimir/quantum_analytic.hpp"

namespace casimir {

std::string_view to_string(ForceRoute route) noexcept {
  switch (route) {
    case ForceRoute::Casimir: return "casimir";
    case ForceRoute::Lifshitz: return "lifshitz";
    case ForceRoute::Oracle: return "oracle";
  }
  return "unknown";
}

ForceRoute parse_force_route(std::string_view name) {
  if (name == "casimir") return ForceRoute::Casimir;
  if (name == "lifshitz") return ForceRoute::Lifshitz;
  if (name == "oracle") return ForceRoute::Oracle;
  throw Error(ErrorCode::InvalidArgument, "unknown force route '" + std::string(name) + "'");
}

namespace {

struct Sample {
  double force;
  double e_vac;
};

class ForceField {
 public:
  ForceField(const ValidatedModel& model, const DynamicsConfig& config)
      : model_(model), route_(config.force_route), basis_(config.oracle_n_max, Sector::EvenParity) {}

  Sample operator()(double y) const {
    switch (route_) {
      case ForceRoute::Casimir:
        return {casimir_force(model_, y), vacuum_energy(model_, y)};
      case ForceRoute::Lifshitz:
        return {lifshitz_force(model_, y), vacuum_energy(model_, y)};
      case ForceRoute::Oracle: {
        const OracleObservables o = oracle_observables(model_, y, basis_);
        return {o.force, o.values.energy};
      }
    }
    return {0.0, 0.0};
  }

 private:
  const ValidatedModel& model_;
  ForceRoute route_;
  TruncatedBasis basis_;
};

}  // namespace

Trajectory evolve(const ValidatedModel& model, const DynamicsConfig& config) {
  if (!(config.dt > 0.0) || !(config.t_max > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "dynamics needs dt > 0 and t_max > 0");
  }
  if (!model.domain().contains(config.y0)) {
    std::ostringstream os;
    os << "y0 = " << config.y0 << " outside coupling domain";
    throw Error(ErrorCode::DomainError, os.str());
  }

  const ForceField field(model, config);
  const double mass = model.M();
  const double dt = config.dt;
  const long steps = std::lround(config.t_max / config.dt);

  const auto started = std::chrono::steady_clock::now();
  Sample sample = field(config.y0);
  if (config.force_route == ForceRoute::Oracle && config.oracle_budget_seconds > 0.0) {
    const double per_call = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    const double projected = per_call * static_cast<double>(steps);
    if (projected > config.oracle_budget_seconds) {
      std::ostringstream os;
      os << "oracle route projected at " << projected << " s for " << steps << " steps, budget "
         << config.oracle_budget_seconds << " s";
      throw Error(ErrorCode::OracleTooSlow, os.str());
    }
  }

  Trajectory out;
  out.rows.reserve(static_cast<std::size_t>(steps) + 1);
  double y = config.y0;
  double p = mass * config.v0;
  out.rows.push_back({0.0, y, p, sample.force, sample.e_vac, p * p / (2.0 * mass) + sample.e_vac});

  for (long step = 1; step <= steps; ++step) {
    const double p_half = p + 0.5 * dt * sample.force;
    const double y_next = y + dt * p_half / mass;
    if (!model.domain().contains(y_next)) {
      out.exited_domain = true;
      break;
    }
    y = y_next;
    sample = field(y);
    p = p_half + 0.5 * dt * sample.force;
    out.rows.push_back({static_cast<double>(step) * dt, y, p, sample.force, sample.e_vac,
                        p * p / (2.0 * mass) + sample.e_vac});
  }
  return out;
}

EnergyAudit energy_audit(const Trajectory& trajectory) {
  if (trajectory.rows.empty()) {
    throw Error(ErrorCode::EmptyTrajectory, "energy audit of an empty trajectory");
  }
  EnergyAudit audit;
  audit.drift_series.reserve(trajectory.rows.size());
  const double e0 = trajectory.rows.front().e_total;
  const double scale = std::abs(e0) > 0.0 ? std::abs(e0) : 1.0;
  for (const TrajectoryRow& row : trajectory.rows) {
    const double drift = std::abs(row.e_total - e0) / scale;
    audit.drift_series.push_back(drift);
    audit.max_rel_drift = std::max(audit.max_rel_drift, drift);
  }
  return audit;
}

}  // namespace casimir
