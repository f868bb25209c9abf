#pragma once

#include <span>

namespace casimir {

/// Order of the symmetric leapfrog composition used by the integrators.
/// Order 2 is plain kick-drift-kick; 4 and 6 are Yoshida triple-jump style
/// compositions of the same leapfrog step.
enum class IntegratorOrder { Second = 2, Fourth = 4, Sixth = 6 };

/// Substep weights w_i with sum w_i = 1; one full step is leapfrog(w_i * dt)
/// applied in sequence.
std::span<const double> composition_weights(IntegratorOrder order) noexcept;

IntegratorOrder integrator_order_from_int(int order);

}  // namespace casimir
