#pragma once

#include <vector>

#include "casimir/model.hpp"

namespace casimir {

/// Closed-form results for the fast oscillators in the interacting
/// effective vacuum at fixed y.

/// E_vac = ħΩ+/2 + ħΩ-/2
double vacuum_energy(const ValidatedModel& model, double y);

/// E_vac - ħω, the y-dependent part of the vacuum energy, evaluated without
/// cancellation: Ω± - ω = ±g / (m(Ω± + ω)).
double vacuum_energy_shift(const ValidatedModel& model, double y);

/// Force from differentiating the vacuum energy:
///   F = -ħg'/(4mΩ+) + ħg'/(4mΩ-)
double casimir_force(const ValidatedModel& model, double y);

struct Fluctuations {
  double x_plus_sq = 0.0;   // <x+^2> = ħ/(2mΩ+)
  double x_minus_sq = 0.0;  // <x-^2> = ħ/(2mΩ-)
  double x1x2 = 0.0;        // (<x+^2> - <x-^2>)/2
};

Fluctuations vacuum_fluctuations(const ValidatedModel& model, double y);

/// Force as the vacuum expectation of -g'(y) x1 x2. Goes through
/// vacuum_fluctuations only; never touches the vacuum energy.
double lifshitz_force(const ValidatedModel& model, double y);

struct BogoliubovCoeffs {
  double alpha_1p = 0.0;
  double alpha_2p = 0.0;
  double alpha_1m = 0.0;
  double alpha_2m = 0.0;
  double beta_1p = 0.0;
  double beta_2p = 0.0;
  double beta_1m = 0.0;
  double beta_2m = 0.0;

  /// sum_j (α_{j+}^2 - β_{j+}^2); equals 1 for a valid transformation.
  double plus_normalization() const noexcept;
  double minus_normalization() const noexcept;
};

/// α_{1±} = (Ω± + ω)/(2√(2Ω±ω)), β_{1±} = (Ω± - ω)/(2√(2Ω±ω)),
/// α_{2±} = ±α_{1±}, β_{2±} = ±β_{1±}. β_{1-} is negative for g > 0.
BogoliubovCoeffs bogoliubov_coefficients(const ValidatedModel& model, double y);

struct FreeQuanta {
  double n1 = 0.0;
  double n2 = 0.0;
};

/// <N_j> = β_{j+}^2 + β_{j-}^2
FreeQuanta mean_free_quanta(const BogoliubovCoeffs& coeffs) noexcept;

/// Complete set of analytic vacuum observables; the oracle reports the same
/// structure so the two can be compared field by field.
struct VacuumObservables {
  double energy = 0.0;
  double x_plus_sq = 0.0;
  double x_minus_sq = 0.0;
  double x1x2 = 0.0;
  double n1 = 0.0;
  double n2 = 0.0;
};

VacuumObservables analytic_observables(const ValidatedModel& model, double y);

enum class Branch { Plus, Minus };

/// Pair expansion of the vacuum of the simplified transformation
/// a = α(a1 + a2) + β(a1† + a2†), with (α, β) = (α_{1,b}, β_{1,b}) of the
/// chosen branch b. Coefficients c_n multiply |n, n>.
struct VacuumExpansion {
  Branch branch = Branch::Plus;
  double alpha = 0.0;
  double beta = 0.0;
  double ratio = 0.0;  // β/α
  double c0 = 0.0;     // sqrt(1 - (β/α)^2)
  int n_max = 0;
  std::vector<double> coefficients;  // c_0..c_{n_max}
  /// Norm carried by n > n_max: (β/α)^{2(n_max+1)} c0^2 / (1 - (β/α)^2).
  double tail = 0.0;

  double truncated_norm_sq() const noexcept;
};

/// Throws InvalidRatio if |β/α| >= 1, InvalidArgument if n_max < 0.
VacuumExpansion squeezed_vacuum_expansion(const BogoliubovCoeffs& coeffs, Branch branch, int n_max);

}  // namespace casimir
