#pragma once

#include <stdexcept>
#include <string>

namespace waylab {

enum class ErrorCode {
  DimensionMismatch,
  NotHermitian,
  NotUnitary,
  BlochNormExceeded,
  InvalidObservable,
  InvalidModel,
  InvalidState,
  UnknownOutcome,
  UnknownId,
  BadParams,
  PreconditionViolated,
  NotSharpProgram,
  MalformedCsv,
  Schema,
  Io,
  NumericFailure,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code. Every failure raised by the
/// library derives from this type; the C API maps `code()` onto
/// `waylab_status`.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace waylab
