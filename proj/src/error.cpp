#include "monoidforge/error.hpp"

namespace monoidforge {

  std::string_view to_string(ErrorCode code) {
    switch (code) {
      case ErrorCode::malformed_table: return "MalformedTable";
      case ErrorCode::non_associative: return "NonAssociative";
      case ErrorCode::not_identity: return "NotIdentity";
      case ErrorCode::empty_input: return "EmptyInput";
      case ErrorCode::host_mismatch: return "HostMismatch";
      case ErrorCode::too_large: return "TooLarge";
      case ErrorCode::not_square_closed: return "NotSquareClosed";
      case ErrorCode::not_an_ideal: return "NotAnIdeal";
      case ErrorCode::not_duo: return "NotDuo";
      case ErrorCode::bad_sigma: return "BadSigma";
      case ErrorCode::not_cofinite: return "NotCofinite";
      case ErrorCode::not_in_semigroup: return "NotInSemigroup";
      case ErrorCode::zero_divisor: return "ZeroDivisor";
      case ErrorCode::improper_ideal: return "ImproperIdeal";
      case ErrorCode::non_positive: return "NonPositive";
      case ErrorCode::bad_bound: return "BadBound";
      case ErrorCode::bad_params: return "BadParams";
      case ErrorCode::parse_error: return "ParseError";
    }
    return "Unknown";
  }

  NonAssociativeError::NonAssociativeError(std::size_t i_,
                                           std::size_t j_,
                                           std::size_t k_)
      : Error(ErrorCode::non_associative,
              "table is not associative at (" + std::to_string(i_) + ", "
                  + std::to_string(j_) + ", " + std::to_string(k_) + ")"),
        i(i_),
        j(j_),
        k(k_) {}

  NotIdentityError::NotIdentityError(std::size_t element_)
      : Error(ErrorCode::not_identity,
              "identity law fails at element " + std::to_string(element_)),
        element(element_) {}

}  // namespace monoidforge
