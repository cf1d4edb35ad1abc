#include "nsag/errors.hpp"

namespace nsag {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZero: return "division_by_zero";
    case ErrorCode::kNonConstructibleRoot: return "non_constructible_root";
    case ErrorCode::kUnlimitedValue: return "unlimited_value";
    case ErrorCode::kUnlimitedCoefficient: return "unlimited_coefficient";
    case ErrorCode::kUnassignedVariable: return "unassigned_variable";
    case ErrorCode::kZeroPolynomial: return "zero_polynomial";
    case ErrorCode::kReservedVariableInUse: return "reserved_variable_in_use";
    case ErrorCode::kNotAShadowRoot: return "not_a_shadow_root";
    case ErrorCode::kEmptyOpen: return "empty_open";
    case ErrorCode::kSupportMismatch: return "support_mismatch";
    case ErrorCode::kZeroDenominator: return "zero_denominator";
    case ErrorCode::kDuplicateParameter: return "duplicate_parameter";
    case ErrorCode::kZeroParameter: return "zero_parameter";
    case ErrorCode::kNotASolution: return "not_a_solution";
    case ErrorCode::kNotAComplex: return "not_a_complex";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kParse: return "parse_error";
  }
  return "unknown";
}

AlgebraError::AlgebraError(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

ParseError::ParseError(std::size_t position, const std::string& message)
    : AlgebraError(ErrorCode::kParse,
                   message + " at position " + std::to_string(position)),
      position_(position) {}

}  // namespace nsag
