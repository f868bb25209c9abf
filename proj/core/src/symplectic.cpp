#include "casimir/symplectic.hpp"

#include <array>
#include <cmath>
#include <string>

#include "casimir/error.hpp"

namespace casimir {

namespace {

constexpr std::array<double, 1> kSecond{1.0};

// Triple jump: w1 = 1/(2 - 2^{1/3}), w0 = 1 - 2 w1.
const std::array<double, 3> kFourth = [] {
  const double w1 = 1.0 / (2.0 - std::cbrt(2.0));
  return std::array<double, 3>{w1, 1.0 - 2.0 * w1, w1};
}();

// Yoshida (1990) sixth order, solution A.
const std::array<double, 7> kSixth = [] {
  const double w1 = -1.17767998417887;
  const double w2 = 0.235573213359357;
  const double w3 = 0.784513610477560;
  const double w0 = 1.0 - 2.0 * (w1 + w2 + w3);
  return std::array<double, 7>{w3, w2, w1, w0, w1, w2, w3};
}();

}  // namespace

std::span<const double> composition_weights(IntegratorOrder order) noexcept {
  switch (order) {
    case IntegratorOrder::Second: return kSecond;
    case IntegratorOrder::Fourth: return kFourth;
    case IntegratorOrder::Sixth: return kSixth;
  }
  return kSecond;
}

IntegratorOrder integrator_order_from_int(int order) {
  switch (order) {
    case 2: return IntegratorOrder::Second;
    case 4: return IntegratorOrder::Fourth;
    case 6: return IntegratorOrder::Sixth;
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument,
              "integrator order must be 2, 4 or 6, got " + std::to_string(order));
}

}  // namespace casimir
