#include "casimir/classical.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "casimir/error.hpp"

namespace casimir {

namespace {

struct Forces {
  double f1;
  double f2;
  double fy;
};

Forces forces(const ValidatedModel& model, const PhaseState& s) {
  const double g = coupling_value(model.coupling(), s.y);
  const double dg = coupling_derivative(model.coupling(), s.y);
  const double k = model.k();
  return {-k * s.x1 - g * s.x2, -k * s.x2 - g * s.x1, -dg * s.x1 * s.x2};
}

}  // namespace

OscillatorPair normal_mode_solution(const Spectrum& spectrum, const ModeAmplitudes& amps, double t) {
  const double plus = amps.c_plus * std::cos(spectrum.omega_plus * t + amps.phi_plus);
  const double minus = amps.c_minus * std::cos(spectrum.omega_minus * t + amps.phi_minus);
  return {plus + minus, plus - minus};
}

double classical_force(const ValidatedModel& model, const PhaseState& state) {
  return -coupling_derivative(model.coupling(), state.y) * state.x1 * state.x2;
}

double classical_energy(const ValidatedModel& model, const PhaseState& s) {
  const double m = model.m();
  const double k = model.k();
  const double g = coupling_value(model.coupling(), s.y);
  return (s.p1 * s.p1 + s.p2 * s.p2) / (2.0 * m) + s.p_y * s.p_y / (2.0 * model.M()) +
         0.5 * k * (s.x1 * s.x1 + s.x2 * s.x2) + g * s.x1 * s.x2;
}

ClassicalTrajectory evolve_classical(const ValidatedModel& model, const PhaseState& initial,
                                     double dt, double t_max, const ClassicalRunOptions& options) {
  if (!(dt > 0.0) || !(t_max > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "dt and t_max must be positive");
  }
  if (options.record_every < 1) {
    throw Error(ErrorCode::InvalidArgument, "record_every must be >= 1");
  }
  if (!model.domain().contains(initial.y)) {
    std::ostringstream os;
    os << "initial y = " << initial.y << " outside coupling domain";
    throw Error(ErrorCode::DomainError, os.str());
  }

  const auto weights = composition_weights(options.order);
  const double inv_m = 1.0 / model.m();
  const double inv_M = 1.0 / model.M();
  const long steps = std::lround(t_max / dt);

  ClassicalTrajectory out;
  out.states.reserve(static_cast<std::size_t>(steps / options.record_every + 2));
  out.states.push_back(initial);
  out.energies.push_back(classical_energy(model, initial));

  PhaseState s = initial;
  Forces f = forces(model, s);
  for (long step = 1; step <= steps; ++step) {
    PhaseState next = s;
    Forces fn = f;
    bool left = false;
    for (double w : weights) {
      const double h = w * dt;
      next.p1 += 0.5 * h * fn.f1;
      next.p2 += 0.5 * h * fn.f2;
      next.p_y += 0.5 * h * fn.fy;
      next.x1 += h * next.p1 * inv_m;
      next.x2 += h * next.p2 * inv_m;
      next.y += h * next.p_y * inv_M;
      if (!model.domain().contains(next.y)) {
        left = true;
        break;
      }
      fn = forces(model, next);
      next.p1 += 0.5 * h * fn.f1;
      next.p2 += 0.5 * h * fn.f2;
      next.p_y += 0.5 * h * fn.fy;
    }
    if (left) {
      out.exited_domain = true;
      break;
    }
    next.t = initial.t + static_cast<double>(step) * dt;
    s = next;
    f = fn;
    if (step % options.record_every == 0 || step == steps) {
      out.states.push_back(s);
      out.energies.push_back(classical_energy(model, s));
    }
  }
  if (out.exited_domain && out.states.back().t != s.t) {
    out.states.push_back(s);
    out.energies.push_back(classical_energy(model, s));
  }
  return out;
}

}  // namespace casimir
