#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spectral {

enum class ErrorCode {
  dimension,
  precondition,
  convergence,
  domain,
  sigma_at_zero,
  parse,
  io,
};

constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::dimension: return "dimension";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::convergence: return "convergence";
    case ErrorCode::domain: return "domain";
    case ErrorCode::sigma_at_zero: return "sigma_at_zero";
    case ErrorCode::parse: return "parse";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// that front ends can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const noexcept { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace spectral
