#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liedef {

enum class Errc {
  parse_error,
  out_of_range,
  too_large,
  arity_mismatch,
  dimension_mismatch,
  denominator_vanishes,
  division_by_zero,
  not_certified,
  singular,
  both_zero,
  bad_label,
  bad_prebasis,
  split_not_spanning,
  truncation_too_small,
  relation_violated,
  unsupported_dim,
  internal,
};

constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::parse_error: return "ParseError";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::too_large: return "TooLarge";
    case Errc::arity_mismatch: return "ArityMismatch";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::denominator_vanishes: return "DenominatorVanishes";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::not_certified: return "NotCertified";
    case Errc::singular: return "Singular";
    case Errc::both_zero: return "BothZero";
    case Errc::bad_label: return "BadLabel";
    case Errc::bad_prebasis: return "BadPrebasis";
    case Errc::split_not_spanning: return "SplitNotSpanning";
    case Errc::truncation_too_small: return "TruncationTooSmall";
    case Errc::relation_violated: return "RelationViolated";
    case Errc::unsupported_dim: return "UnsupportedDim";
    case Errc::internal: return "InternalError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace liedef
