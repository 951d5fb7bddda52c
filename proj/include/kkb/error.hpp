#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kkb {

enum class ErrorCode {
  EmptyGenerators,
  TrivialUpperSet,
  WidthMismatch,
  NotAntichain,
  SizeLimitExceeded,
  MissingMcParams,
  NonConvergence,
  KOutOfRange,
  OutOfRange,
  CapExceeded,
  DegenerateDraw,
  EmptyInput,
  TooFewRecords,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for the "input is fine but too large for exact computation" family.
  bool is_cap_error() const noexcept {
    return code_ == ErrorCode::SizeLimitExceeded || code_ == ErrorCode::CapExceeded;
  }

 private:
  ErrorCode code_;
};

}  // namespace kkb
