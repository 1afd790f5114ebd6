#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symlog {

enum class ErrorCode {
  DimensionMismatch,
  SingularMatrix,
  NoConvergence,
  NotHermitian,
  NotNearlyUnitary,
  NotChiral,
  AmbiguousSignature,
  ObstructionDetected,
  MaxIterationsExceeded,
  SingularIteration,
  NormTooLarge,
  UnsupportedClass,
  InvalidArgument,
  Cancelled,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure the library reports is an Error carrying one of the codes
// above; callers branch on code(), never on the message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace symlog
