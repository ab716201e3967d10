#pragma once

// Exact 128-bit counters. Every arithmetic step on codeword and census counts
// goes through the checked helpers; overflow raises Errc::Overflow.

#include <cstdint>
#include <string>

#include "hermit/error.hpp"

namespace hermit {

__extension__ typedef __int128 Count;

inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "addition");
  return r;
}

inline Count checked_sub(Count a, Count b) {
  Count r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::Overflow, "subtraction");
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "multiplication");
  return r;
}

/// Exact division; a nonzero remainder is a bug in the caller's formula.
inline Count exact_div(Count a, Count b, const char* what = "exact division") {
  if (b == 0) throw Error(Errc::DivisionByZero, what);
  if (a % b != 0) throw Error(Errc::NonIntegralResult, what);
  return a / b;
}

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Count binom(std::int64_t n, std::int64_t k);

Count factorial(int n);

Count ipow(Count base, unsigned exp);

std::string to_string(Count v);

/// True when v is representable as int64 (used to pick a JSON number vs string).
inline bool fits_int64(Count v) {
  return v >= static_cast<Count>(INT64_MIN) && v <= static_cast<Count>(INT64_MAX);
}

}  // namespace hermit
