#include "casimir/model.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "casimir/error.hpp"

namespace casimir {

std::string_view to_string(CouplingFamily family) noexcept {
  switch (family) {
    case CouplingFamily::Constant: return "constant";
    case CouplingFamily::Exponential: return "exponential";
    case CouplingFamily::InversePower: return "inverse-power";
  }
  return "unknown";
}

CouplingFamily parse_coupling_family(std::string_view name) {
  if (name == "constant") return CouplingFamily::Constant;
  if (name == "exponential") return CouplingFamily::Exponential;
  if (name == "inverse-power" || name == "inverse_power") return CouplingFamily::InversePower;
  throw Error(ErrorCode::InvalidArgument, "unknown coupling family '" + std::string(name) + "'");
}

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream os;
    os << name << " must be positive and finite, got " << value;
    throw Error(ErrorCode::NonpositiveParameter, os.str());
  }
}

void require_in_domain(const CouplingSpec& spec, double y) {
  if (!spec.domain.contains(y)) {
    std::ostringstream os;
    os << "y = " << y << " outside coupling domain [" << spec.domain.y_min << ", "
       << spec.domain.y_max << "]";
    throw Error(ErrorCode::DomainError, os.str());
  }
}

}  // namespace

ValidatedModel validate(const ModelParams& params) {
  require_positive(params.m, "m");
  require_positive(params.M, "M");
  require_positive(params.k, "k");
  require_positive(params.hbar, "hbar");

  const CouplingSpec& c = params.coupling;
  if (!(c.g0 >= 0.0) || !std::isfinite(c.g0)) {
    throw Error(ErrorCode::ConstraintViolation, "coupling amplitude g0 must be >= 0");
  }
  if (c.family != CouplingFamily::Constant) require_positive(c.lambda, "lambda");
  if (c.family == CouplingFamily::InversePower && c.exponent < 1) {
    throw Error(ErrorCode::ConstraintViolation, "inverse-power exponent must be a positive integer");
  }
  if (!std::isfinite(c.domain.y_min) || !std::isfinite(c.domain.y_max) ||
      !(c.domain.y_min < c.domain.y_max)) {
    throw Error(ErrorCode::ConstraintViolation, "coupling domain requires finite y_min < y_max");
  }
  if (c.family == CouplingFamily::InversePower && c.domain.y_min < 0.0) {
    throw Error(ErrorCode::ConstraintViolation, "inverse-power family requires y_min >= 0");
  }

  const double g_sup = coupling_value(c, c.domain.y_min);
  if (!(g_sup < params.k)) {
    std::ostringstream os;
    os << "g(y_min) = " << g_sup << " >= k = " << params.k;
    throw Error(ErrorCode::ConstraintViolation, os.str());
  }
  return ValidatedModel(params);
}

double coupling_value(const CouplingSpec& spec, double y) {
  require_in_domain(spec, y);
  switch (spec.family) {
    case CouplingFamily::Constant:
      return spec.g0;
    case CouplingFamily::Exponential:
      return spec.g0 * std::exp(-y / spec.lambda);
    case CouplingFamily::InversePower:
      return spec.g0 / (1.0 + std::pow(y / spec.lambda, spec.exponent));
  }
  return 0.0;
}

double coupling_derivative(const CouplingSpec& spec, double y) {
  require_in_domain(spec, y);
  switch (spec.family) {
    case CouplingFamily::Constant:
      return 0.0;
    case CouplingFamily::Exponential:
      return -spec.g0 / spec.lambda * std::exp(-y / spec.lambda);
    case CouplingFamily::InversePower: {
      // d/dy g0 / (1 + u^n), u = y/lambda
      const double u = y / spec.lambda;
      const int n = spec.exponent;
      const double denom = 1.0 + std::pow(u, n);
      return -spec.g0 * n * std::pow(u, n - 1) / (spec.lambda * denom * denom);
    }
  }
  return 0.0;
}

Spectrum spectrum(const ValidatedModel& model, double y) {
  const double g = coupling_value(model.coupling(), y);
  const double m = model.m();
  const double k = model.k();
  return Spectrum{
      .omega = std::sqrt(k / m),
      .omega_g = std::sqrt(g / m),
      .omega_plus = std::sqrt((k + g) / m),
      .omega_minus = std::sqrt((k - g) / m),
  };
}

NormalPair to_normal(OscillatorPair x) noexcept {
  return {(x.x1 + x.x2) / std::sqrt(2.0), (x.x1 - x.x2) / std::sqrt(2.0)};
}

OscillatorPair from_normal(NormalPair x) noexcept {
  return {(x.plus + x.minus) / std::sqrt(2.0), (x.plus - x.minus) / std::sqrt(2.0)};
}

}  // namespace casimir
