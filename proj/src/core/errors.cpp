#include "errors.hpp"

namespace fcir {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CovarianceNotPD: return "CovarianceNotPD";
    case ErrorCode::EmbeddingNotNonnegative: return "EmbeddingNotNonnegative";
    case ErrorCode::NonpositiveStart: return "NonpositiveStart";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::HurstTooSmall: return "HurstTooSmall";
    case ErrorCode::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ArgOrder: return "ArgOrder";
    case ErrorCode::HalfHurst: return "HalfHurst";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, std::string(to_string(code)) + ": " + message);
}

}  // namespace fcir
