#include "casimir/error.hpp"

namespace casimir {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ConstraintViolation: return "CONSTRAINT_VIOLATION";
    case ErrorCode::NonpositiveParameter: return "NONPOSITIVE_PARAMETER";
    case ErrorCode::DomainError: return "DOMAIN_ERROR";
    case ErrorCode::DomainExit: return "DOMAIN_EXIT";
    case ErrorCode::InvalidRatio: return "INVALID_RATIO";
    case ErrorCode::TruncationMismatch: return "TRUNCATION_MISMATCH";
    case ErrorCode::NoConvergence: return "NO_CONVERGENCE";
    case ErrorCode::EmptyTrajectory: return "EMPTY_TRAJECTORY";
    case ErrorCode::OracleTooSlow: return "ORACLE_TOO_SLOW";
    case ErrorCode::NonpositiveSeparation: return "NONPOSITIVE_SEPARATION";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

}  // namespace casimir
