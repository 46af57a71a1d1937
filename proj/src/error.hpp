#pragma once

#include <stdexcept>
#include <string>

namespace qci {

// Error taxonomy shared by the C++ core and the C surface.  Codes that map to
// bad *input* (parse errors, invalid configs, impossible field requests) are
// distinguished from codes raised when a mathematical check fails at runtime;
// the CLI turns the former into exit code 2 and the latter into exit code 1.
enum class ErrorCode {
  Internal = 1,
  InvalidArgument,
  ParseError,
  IoError,
  NoPrimitiveRoot,
  FieldMismatch,
  PresentationMismatch,
  DimensionMismatch,
  InhomogeneousElement,
  ZeroLeadingCoordinate,
  OddCodimension,
  InvalidModule,
  IllDefinedMap,
  WindowEmpty,
  NoAlphaFound,
  InvalidChainStep,
  PositiveCharacteristic,
  NonUnitalInput,
  CannotDecide,
  MathCheckFailed,
};

class QciError : public std::runtime_error {
 public:
  QciError(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

  // true when the error indicates a bad request rather than a failed check
  bool is_config_error() const {
    switch (code_) {
      case ErrorCode::MathCheckFailed:
      case ErrorCode::NoAlphaFound:
        return false;
      default:
        return true;
    }
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw QciError(code, msg);
}

inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

const char* error_code_name(ErrorCode code);

}  // namespace qci
