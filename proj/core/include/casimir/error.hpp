#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace casimir {

enum class ErrorCode {
  ConstraintViolation,
  NonpositiveParameter,
  DomainError,
  DomainExit,
  InvalidRatio,
  TruncationMismatch,
  NoConvergence,
  EmptyTrajectory,
  OracleTooSlow,
  NonpositiveSeparation,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code; what() names the offending
/// quantity so callers can report it verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace casimir
