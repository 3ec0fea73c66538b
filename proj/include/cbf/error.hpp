#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cbf {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  LengthMismatch,
  OddLength,
  CapExceeded,
  ImpossibleHeight,
  UnsupportedLength,
  MixedLengths,
  NoBlocker,
  IoFailure,
  ConsistencyFailure,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cbf
