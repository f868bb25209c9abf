#pragma once

#include <cstdint>
#include <string_view>

namespace casimir {

enum class CouplingFamily { Constant, Exponential, InversePower };

std::string_view to_string(CouplingFamily family) noexcept;
/// Parses "constant" | "exponential" | "inverse-power"; throws InvalidArgument.
CouplingFamily parse_coupling_family(std::string_view name);

struct Domain {
  double y_min = 0.0;
  double y_max = 10.0;

  bool contains(double y) const noexcept { return y >= y_min && y <= y_max; }
};

/// Coupling g(y) between the two fast oscillators. All families are
/// non-increasing in y, so sup g over the domain is g(y_min).
struct CouplingSpec {
  CouplingFamily family = CouplingFamily::Exponential;
  double g0 = 0.0;
  double lambda = 1.0;  // length scale; ignored by the constant family
  int exponent = 2;     // inverse-power family only
  Domain domain{};
};

struct ModelParams {
  double m = 1.0;     // fast oscillator mass
  double M = 1000.0;  // slow coordinate mass
  double k = 1.0;     // spring constant
  double hbar = 1.0;
  CouplingSpec coupling{};
};

/// Model parameters that passed validate(). Immutable.
class ValidatedModel {
 public:
  const ModelParams& params() const noexcept { return params_; }
  const CouplingSpec& coupling() const noexcept { return params_.coupling; }
  const Domain& domain() const noexcept { return params_.coupling.domain; }

  double m() const noexcept { return params_.m; }
  double M() const noexcept { return params_.M; }
  double k() const noexcept { return params_.k; }
  double hbar() const noexcept { return params_.hbar; }

  double mass_ratio() const noexcept { return params_.M / params_.m; }
  /// Set when M/m < 100: the slow coordinate is not much heavier than the
  /// oscillators and adiabatic following is questionable.
  bool adiabatic_warning() const noexcept { return mass_ratio() < 100.0; }

 private:
  explicit ValidatedModel(const ModelParams& params) : params_(params) {}
  friend ValidatedModel validate(const ModelParams& params);

  ModelParams params_;
};

/// Checks positivity of m, M, k, hbar and 0 <= g(y) < k on the whole domain.
/// Throws Error{NonpositiveParameter} or Error{ConstraintViolation}.
ValidatedModel validate(const ModelParams& params);

double coupling_value(const CouplingSpec& spec, double y);
double coupling_derivative(const CouplingSpec& spec, double y);

struct Spectrum {
  double omega = 0.0;        // sqrt(k/m)
  double omega_g = 0.0;      // sqrt(g/m)
  double omega_plus = 0.0;   // sqrt((k+g)/m)
  double omega_minus = 0.0;  // sqrt((k-g)/m)
};

Spectrum spectrum(const ValidatedModel& model, double y);

struct NormalPair {
  double plus = 0.0;
  double minus = 0.0;
};

struct OscillatorPair {
  double x1 = 0.0;
  double x2 = 0.0;
};

/// x± = (x1 ± x2)/√2
NormalPair to_normal(OscillatorPair x) noexcept;
/// x1 = (x+ + x-)/√2, x2 = (x+ - x-)/√2
OscillatorPair from_normal(NormalPair x) noexcept;

}  // namespace casimir
