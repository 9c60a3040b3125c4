#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ppclass {

enum class ErrorCode {
  NonPrime,
  NotIrreducible,
  CapExceeded,
  DivisionByZero,
  NotADivisor,
  InvalidElement,
  BadExponent,
  NotRootOfUnity,
  ZeroShift,
  OutOfRange,
  DimensionMismatch,
  TooLargeField,
  NotAPermutation,
  BudgetExceeded,
  DegenerateParameters,
  NotConstructible,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Precondition violations raised by every module. The CLI maps
// BudgetExceeded to exit code 3 and everything else to 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ppclass
