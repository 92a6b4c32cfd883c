#include "efountain/error.hpp"

namespace efountain {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::non_associative: return "NonAssociative";
    case ErrorCode::mixed_degrees: return "MixedDegrees";
    case ErrorCode::not_idempotent: return "NotIdempotent";
    case ErrorCode::not_e_fountain: return "NotEFountain";
    case ErrorCode::not_reduced: return "NotReduced";
    case ErrorCode::internal_mismatch: return "InternalMismatch";
    case ErrorCode::congruence_required: return "CongruenceConditionRequired";
    case ErrorCode::not_ehresmann: return "NotEhresmann";
    case ErrorCode::basis_mismatch: return "BasisMismatch";
    case ErrorCode::not_contained: return "NotContained";
    case ErrorCode::non_invertible_diagonal: return "NonInvertibleDiagonal";
    case ErrorCode::not_comparable: return "NotComparable";
    case ErrorCode::degree_too_large: return "DegreeTooLarge";
    case ErrorCode::axiom_failure: return "AxiomFailure";
    case ErrorCode::theorem_violation: return "TheoremViolation";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::io_error: return "IoError";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace efountain
