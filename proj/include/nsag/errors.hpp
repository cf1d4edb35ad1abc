#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nsag {

// Stable error identifiers; the CLI emits error_code_name() verbatim.
enum class ErrorCode {
  kDivisionByZero,
  kNonConstructibleRoot,
  kUnlimitedValue,
  kUnlimitedCoefficient,
  kUnassignedVariable,
  kZeroPolynomial,
  kReservedVariableInUse,
  kNotAShadowRoot,
  kEmptyOpen,
  kSupportMismatch,
  kZeroDenominator,
  kDuplicateParameter,
  kZeroParameter,
  kNotASolution,
  kNotAComplex,
  kInvalidArgument,
  kParse,
};

std::string_view error_code_name(ErrorCode code);

class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public AlgebraError {
 public:
  ParseError(std::size_t position, const std::string& message);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace nsag
