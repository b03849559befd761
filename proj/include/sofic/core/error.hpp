#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sofic {

  enum class ErrorCode {
    parse_error,
    invalid_argument,
    cap_exceeded,
    dimension_mismatch,
    not_associative,
    not_generated,
    not_a_group,
    not_idempotent,
    not_factorial,
    not_irreducible,
    not_surjective,
    not_regular,
    not_homomorphism,
    not_strongly_connected,
    shift_is_minimal,
    not_primitive,
    check_failed,
    not_aggm,
    trivial_semigroup,
    no_compatible_triangle,
    not_faithful,
    not_transitive,
    rank_too_high,
    hypothesis_violated,
    prime_search_failed,
    invalid_state,
    tolerance_not_reached,
    not_a_subshift,
    overflow
  };

  constexpr std::string_view code_name(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::parse_error: return "ParseError";
      case ErrorCode::invalid_argument: return "InvalidArgument";
      case ErrorCode::cap_exceeded: return "CapExceeded";
      case ErrorCode::dimension_mismatch: return "DimensionMismatch";
      case ErrorCode::not_associative: return "NotAssociative";
      case ErrorCode::not_generated: return "NotGenerated";
      case ErrorCode::not_a_group: return "NotAGroup";
      case ErrorCode::not_idempotent: return "NotIdempotent";
      case ErrorCode::not_factorial: return "NotFactorial";
      case ErrorCode::not_irreducible: return "NotIrreducible";
      case ErrorCode::not_surjective: return "NotSurjective";
      case ErrorCode::not_regular: return "NotRegular";
      case ErrorCode::not_homomorphism: return "NotHomomorphism";
      case ErrorCode::not_strongly_connected: return "NotStronglyConnected";
      case ErrorCode::shift_is_minimal: return "ShiftIsMinimal";
      case ErrorCode::not_primitive: return "NotPrimitive";
      case ErrorCode::check_failed: return "CheckFailed";
      case ErrorCode::not_aggm: return "NotAGGM";
      case ErrorCode::trivial_semigroup: return "TrivialSemigroup";
      case ErrorCode::no_compatible_triangle: return "NoCompatibleTriangle";
      case ErrorCode::not_faithful: return "NotFaithful";
      case ErrorCode::not_transitive: return "NotTransitive";
      case ErrorCode::rank_too_high: return "RankTooHigh";
      case ErrorCode::hypothesis_violated: return "HypothesisViolated";
      case ErrorCode::prime_search_failed: return "PrimeSearchFailed";
      case ErrorCode::invalid_state: return "InvalidState";
      case ErrorCode::tolerance_not_reached: return "ToleranceNotReached";
      case ErrorCode::not_a_subshift: return "NotASubshift";
      case ErrorCode::overflow: return "Overflow";
    }
    return "Unknown";
  }

  //! Every failure raised by the library carries a machine-readable code and
  //! a free-form detail (usually a witness).
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string detail)
        : std::runtime_error(std::string(code_name(code)) + ": " + detail),
          _code(code),
          _detail(std::move(detail)) {}

    [[nodiscard]] ErrorCode code() const noexcept {
      return _code;
    }

    [[nodiscard]] std::string const& detail() const noexcept {
      return _detail;
    }

   private:
    ErrorCode   _code;
    std::string _detail;
  };

  namespace detail {
    [[noreturn]] inline void fail(ErrorCode code, std::string detail) {
      throw Error(code, std::move(detail));
    }

    inline void check(bool condition, std::string_view what) {
      if (!condition) {
        throw Error(ErrorCode::check_failed, std::string(what));
      }
    }
  }  // namespace detail

}  // namespace sofic
