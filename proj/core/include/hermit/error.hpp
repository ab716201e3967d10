#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hermit {

enum class Errc {
  NotPrime,
  FieldTooLarge,
  DivisionByZero,
  NotInSubfield,
  NotASquare,
  EvenCharacteristic,
  NotOnCurve,
  NotAParabola,
  InvalidAutomorphism,
  BruteLimitExceeded,
  InadmissibleCount,
  SpecOutOfRange,
  MOutOfRange,
  NoMatchingM,
  BudgetExceeded,
  NonIntegralResult,
  Overflow,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hermit
