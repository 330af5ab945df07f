#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace monoidforge {

  enum class ErrorCode {
    malformed_table,
    non_associative,
    not_identity,
    empty_input,
    host_mismatch,
    too_large,
    not_square_closed,
    not_an_ideal,
    not_duo,
    bad_sigma,
    not_cofinite,
    not_in_semigroup,
    zero_divisor,
    improper_ideal,
    non_positive,
    bad_bound,
    bad_params,
    parse_error
  };

  std::string_view to_string(ErrorCode code);

  // Every error raised by the library carries one of the codes above; the
  // subclasses below additionally carry the offending element indices.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept {
      return code_;
    }

   private:
    ErrorCode code_;
  };

  class NonAssociativeError : public Error {
   public:
    NonAssociativeError(std::size_t i, std::size_t j, std::size_t k);

    std::size_t i, j, k;
  };

  class NotIdentityError : public Error {
   public:
    explicit NotIdentityError(std::size_t element);

    std::size_t element;
  };

}  // namespace monoidforge
