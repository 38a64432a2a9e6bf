#pragma once

#include <stdexcept>
#include <string>

namespace fcir {

enum class ErrorCode {
  InvalidArgument = 1,
  CovarianceNotPD,
  EmbeddingNotNonnegative,
  NonpositiveStart,
  GridMismatch,
  HurstTooSmall,
  ToleranceNotMet,
  DomainError,
  ArgOrder,
  HalfHurst,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception carrying a stable error code. Everything thrown by the core
/// library is an `Error`; the C layer maps `code()` onto status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace fcir
