#include "casimir/quantum_analytic.hpp"

#include <cmath>
#include <sstream>

#include "casimir/error.hpp"

namespace casimir {

double vacuum_energy(const ValidatedModel& model, double y) {
  const Spectrum s = spectrum(model, y);
  return 0.5 * model.hbar() * (s.omega_plus + s.omega_minus);
}

double vacuum_energy_shift(const ValidatedModel& model, double y) {
  const Spectrum s = spectrum(model, y);
  const double g = coupling_value(model.coupling(), y);
  const double m = model.m();
  const double up = g / (m * (s.omega_plus + s.omega));
  const double down = g / (m * (s.omega_minus + s.omega));
  return 0.5 * model.hbar() * (up - down);
}

double casimir_force(const ValidatedModel& model, double y) {
  const Spectrum s = spectrum(model, y);
  const double dg = coupling_derivative(model.coupling(), y);
  const double g = coupling_value(model.coupling(), y);
  // ħg'/4m (1/Ω- - 1/Ω+) with Ω+ - Ω- = 2g / m(Ω+ + Ω-)
  const double gap = 2.0 * g / (model.m() * (s.omega_plus + s.omega_minus));
  return model.hbar() * dg / (4.0 * model.m()) * gap / (s.omega_plus * s.omega_minus);
}

Fluctuations vacuum_fluctuations(const ValidatedModel& model, double y) {
  const Spectrum s = spectrum(model, y);
  Fluctuations f;
  f.x_plus_sq = model.hbar() / (2.0 * model.m() * s.omega_plus);
  f.x_minus_sq = model.hbar() / (2.0 * model.m() * s.omega_minus);
  const double g = coupling_value(model.coupling(), y);
  const double gap = 2.0 * g / (model.m() * (s.omega_plus + s.omega_minus));
  f.x1x2 = -model.hbar() / (4.0 * model.m()) * gap / (s.omega_plus * s.omega_minus);
  return f;
}

double lifshitz_force(const ValidatedModel& model, double y) {
  const Fluctuations f = vacuum_fluctuations(model, y);
  const double dg = coupling_derivative(model.coupling(), y);
  return -dg * f.x1x2;
}

double BogoliubovCoeffs::plus_normalization() const noexcept {
  return alpha_1p * alpha_1p + alpha_2p * alpha_2p - beta_1p * beta_1p - beta_2p * beta_2p;
}

double BogoliubovCoeffs::minus_normalization() const noexcept {
  return alpha_1m * alpha_1m + alpha_2m * alpha_2m - beta_1m * beta_1m - beta_2m * beta_2m;
}

BogoliubovCoeffs bogoliubov_coefficients(const ValidatedModel& model, double y) {
  const Spectrum s = spectrum(model, y);
  const double w = s.omega;
  const auto alpha = [w](double big) { return (big + w) / (2.0 * std::sqrt(2.0 * big * w)); };
  const auto beta = [w](double big) { return (big - w) / (2.0 * std::sqrt(2.0 * big * w)); };

  BogoliubovCoeffs c;
  c.alpha_1p = alpha(s.omega_plus);
  c.alpha_2p = c.alpha_1p;
  c.alpha_1m = alpha(s.omega_minus);
  c.alpha_2m = -c.alpha_1m;
  c.beta_1p = beta(s.omega_plus);
  c.beta_2p = c.beta_1p;
  c.beta_1m = beta(s.omega_minus);
  c.beta_2m = -c.beta_1m;
  return c;
}

FreeQuanta mean_free_quanta(const BogoliubovCoeffs& c) noexcept {
  return {c.beta_1p * c.beta_1p + c.beta_1m * c.beta_1m,
          c.beta_2p * c.beta_2p + c.beta_2m * c.beta_2m};
}

VacuumObservables analytic_observables(const ValidatedModel& model, double y) {
  const Fluctuations f = vacuum_fluctuations(model, y);
  const FreeQuanta n = mean_free_quanta(bogoliubov_coefficients(model, y));
  return {vacuum_energy(model, y), f.x_plus_sq, f.x_minus_sq, f.x1x2, n.n1, n.n2};
}

double VacuumExpansion::truncated_norm_sq() const noexcept {
  double sum = 0.0;
  for (double c : coefficients) sum += c * c;
  return sum;
}

VacuumExpansion squeezed_vacuum_expansion(const BogoliubovCoeffs& coeffs, Branch branch, int n_max) {
  if (n_max < 0) {
    throw Error(ErrorCode::InvalidArgument, "expansion order N_max must be >= 0");
  }
  VacuumExpansion e;
  e.branch = branch;
  e.alpha = branch == Branch::Plus ? coeffs.alpha_1p : coeffs.alpha_1m;
  e.beta = branch == Branch::Plus ? coeffs.beta_1p : coeffs.beta_1m;
  e.ratio = e.beta / e.alpha;
  if (!std::isfinite(e.ratio) || !(std::abs(e.ratio) < 1.0)) {
    std::ostringstream os;
    os << "|beta/alpha| = " << std::abs(e.ratio) << " is not below 1";
    throw Error(ErrorCode::InvalidRatio, os.str());
  }
  const double r2 = e.ratio * e.ratio;
  e.c0 = std::sqrt(1.0 - r2);
  e.n_max = n_max;
  e.coefficients.resize(static_cast<std::size_t>(n_max) + 1);
  double c = e.c0;
  for (int n = 0; n <= n_max; ++n) {
    e.coefficients[static_cast<std::size_t>(n)] = c;
    c *= -e.ratio;
  }
  // c0^2 / (1 - r^2) = 1, so the tail is r^{2(n_max+1)}.
  e.tail = std::pow(r2, n_max + 1);
  return e;
}

}  // namespace casimir
