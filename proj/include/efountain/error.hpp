#pragma once

#include <stdexcept>
#include <string>

namespace efountain {

enum class ErrorCode {
  invalid_argument,
  index_out_of_range,
  non_associative,
  mixed_degrees,
  not_idempotent,
  not_e_fountain,
  not_reduced,
  internal_mismatch,
  congruence_required,
  not_ehresmann,
  basis_mismatch,
  not_contained,
  non_invertible_diagonal,
  not_comparable,
  degree_too_large,
  axiom_failure,
  theorem_violation,
  parse_error,
  io_error,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace efountain
