#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ses {

enum class ErrorCode {
  EmptyInput,
  InvalidUtf8,
  Unrepresentable,
  ParseError,
  LengthMismatch,
  ArityMismatch,
  IndexOutOfRange,
  CharMismatch,
  SchemeMismatch,
  FormatError,
  MissingLemma,
  StructureMismatch,
  EmptyEval,
  EmptyCorpus,
  IoError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library. `code()` distinguishes the contract
/// that was violated; the message carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// True for the errors a decoder raises when a well-formed label does not fit
/// the wordform it is applied to.
inline bool is_decode_mismatch(ErrorCode code) noexcept {
  return code == ErrorCode::ArityMismatch || code == ErrorCode::CharMismatch ||
         code == ErrorCode::LengthMismatch || code == ErrorCode::IndexOutOfRange;
}

}  // namespace ses
