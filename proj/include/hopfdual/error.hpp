#pragma once

#include <stdexcept>
#include <string>

namespace hopfdual {

enum class ErrorCode {
  FieldMismatch,
  DimensionMismatch,
  InvalidArgument,
  NotPrime,
  ParseError,
  AntipodeAbsent,
  NotAGroup,
  NotAbelian,
  NotCommutative,
  CharDividesOrder,
  NotASection,
  InsufficientRoots,
  BudgetExceeded,
  NotPositivelyGraded,
  SingularMatrix,
  UnsupportedPreset,
  CharacteristicNotZero,
  OutOfTruncation,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hopfdual
