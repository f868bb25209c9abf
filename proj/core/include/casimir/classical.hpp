#pragma once

#include <vector>

#include "casimir/model.hpp"
#include "casimir/symplectic.hpp"

namespace casimir {

struct PhaseState {
  double x1 = 0.0;
  double x2 = 0.0;
  double y = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double p_y = 0.0;
  double t = 0.0;
};

struct ModeAmplitudes {
  double c_plus = 0.0;
  double c_minus = 0.0;
  double phi_plus = 0.0;
  double phi_minus = 0.0;
};

/// Real superposition of the two normal modes at frozen y:
///   x1 = c+ cos(Ω+ t + φ+) + c- cos(Ω- t + φ-)
///   x2 = c+ cos(Ω+ t + φ+) - c- cos(Ω- t + φ-)
OscillatorPair normal_mode_solution(const Spectrum& spectrum, const ModeAmplitudes& amps, double t);

/// F = -g'(y) x1 x2. Throws DomainError when y is outside the coupling domain.
double classical_force(const ValidatedModel& model, const PhaseState& state);

/// Full three-degree-of-freedom Hamiltonian H(x1, x2, y, p1, p2, p_y).
double classical_energy(const ValidatedModel& model, const PhaseState& state);

struct ClassicalTrajectory {
  std::vector<PhaseState> states;  // includes the initial state
  std::vector<double> energies;    // H at each recorded state
  bool exited_domain = false;
};

struct ClassicalRunOptions {
  IntegratorOrder order = IntegratorOrder::Fourth;
  /// Record every n-th step (the final state is always recorded).
  int record_every = 1;
};

/// Integrates Hamilton's equations of the full model with a symmetric
/// leapfrog composition. Stops early, with exited_domain set, when y leaves
/// the coupling domain; the returned states end at the last in-domain step.
ClassicalTrajectory evolve_classical(const ValidatedModel& model, const PhaseState& initial,
                                     double dt, double t_max, const ClassicalRunOptions& options = {});

}  // namespace casimir
