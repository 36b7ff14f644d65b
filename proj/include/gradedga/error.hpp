#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gradedga {

enum class ErrorCode {
  AlgebraMismatch,
  DimensionCap,
  InvalidArgument,
  NullNorm,
  NonInvertible,
  DegenerateRoots,
  AxisUndefined,
  NonConvergence,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::DimensionCap: return "DimensionCap";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NullNorm: return "NullNorm";
    case ErrorCode::NonInvertible: return "NonInvertible";
    case ErrorCode::DegenerateRoots: return "DegenerateRoots";
    case ErrorCode::AxisUndefined: return "AxisUndefined";
    case ErrorCode::NonConvergence: return "NonConvergence";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto a structured error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace gradedga
