#include "hermit/count.hpp"

#include <algorithm>

namespace hermit {

namespace {
__extension__ typedef unsigned __int128 UCount;
}  // namespace

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotInSubfield: return "NotInSubfield";
    case Errc::NotASquare: return "NotASquare";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::NotOnCurve: return "NotOnCurve";
    case Errc::NotAParabola: return "NotAParabola";
    case Errc::InvalidAutomorphism: return "InvalidAutomorphism";
    case Errc::BruteLimitExceeded: return "BruteLimitExceeded";
    case Errc::InadmissibleCount: return "InadmissibleCount";
    case Errc::SpecOutOfRange: return "SpecOutOfRange";
    case Errc::MOutOfRange: return "MOutOfRange";
    case Errc::NoMatchingM: return "NoMatchingM";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NonIntegralResult: return "NonIntegralResult";
    case Errc::Overflow: return "Overflow";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Count binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

Count factorial(int n) {
  Count r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

Count ipow(Count base, unsigned exp) {
  Count r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

std::string to_string(Count v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // magnitude via unsigned to survive the minimum value
  UCount mag = negative ? -static_cast<UCount>(v) : static_cast<UCount>(v);
  std::string s;
  while (mag != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace hermit
