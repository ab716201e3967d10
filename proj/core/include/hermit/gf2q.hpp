#pragma once

// Arithmetic in GF(q^2), q = p^e, with the subfield GF(q) embedded as the
// fixed field of x -> x^q.
//
// Elements are stored by their canonical encoding: the element
// c_0 + c_1 t + ... + c_{2e-1} t^{2e-1} (t the class of the variable modulo
// the defining polynomial) is encoded as the integer sum c_i p^i. Zero is 0,
// one is 1, and the prime field GF(p) is exactly the encodings [0, p).

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace hermit {

struct Elem {
  std::uint32_t enc = 0;

  constexpr auto operator<=>(const Elem&) const = default;
};

inline constexpr std::uint32_t kDefaultTableLimit = 1u << 16;

class Field {
 public:
  /// Builds GF(p^(2e)). The defining polynomial is the smallest monic
  /// irreducible of degree 2e (coefficients compared from degree 2e-1 down)
  /// whose root t is primitive; alpha is that root.
  /// Throws NotPrime, FieldTooLarge (q^2 > table_limit) or InvalidArgument.
  static Field build(unsigned p, unsigned e, std::uint32_t table_limit = kDefaultTableLimit);

  unsigned p() const noexcept { return p_; }
  unsigned e() const noexcept { return e_; }
  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t q2() const noexcept { return q2_; }
  bool odd() const noexcept { return p_ != 2; }

  /// Defining polynomial coefficients, lowest degree first, length 2e+1.
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  Elem alpha() const noexcept { return exp_[1]; }
  /// alpha^(q+1), a primitive element of GF(q).
  Elem beta() const noexcept { return exp_[q_ + 1]; }

  /// Image of an integer in the prime field.
  Elem from_int(std::int64_t v) const noexcept;
  Elem element(std::uint32_t enc) const;

  Elem add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return Elem{a.enc ^ b.enc};
    if (!add_table_.empty()) return Elem{add_table_[a.enc * q2_ + b.enc]};
    return add_digits(a, b);
  }
  Elem neg(Elem a) const noexcept { return Elem{neg_[a.enc]}; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a.enc == 0 || b.enc == 0) return Elem{0};
    return exp_[log_[a.enc] + log_[b.enc]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// a^n for any integer n; negative n requires a != 0.
  Elem pow(Elem a, std::int64_t n) const;

  /// Discrete logarithm to base alpha, in [0, q^2-2]. Requires a != 0.
  std::uint32_t log(Elem a) const;
  /// alpha^k for any integer k.
  Elem exp(std::int64_t k) const noexcept;

  Elem frobenius(Elem a) const noexcept { return Elem{frob_[a.enc]}; }
  /// N(x) = x^(q+1).
  Elem norm(Elem a) const noexcept { return Elem{norm_[a.enc]}; }
  /// Tr(x) = x^q + x.
  Elem trace(Elem a) const noexcept { return add(Elem{frob_[a.enc]}, a); }
  bool in_subfield(Elem a) const noexcept { return frob_[a.enc] == a.enc; }

  /// Trace from GF(q) down to GF(p): x + x^p + ... + x^(p^(e-1)).
  /// Throws NotInSubfield.
  Elem subfield_trace_to_prime(Elem x) const;

  /// Square test in GF(q^2); every element is a square in characteristic 2.
  bool is_square(Elem a) const noexcept;
  /// Square root alpha^(log/2) in odd characteristic.
  /// Throws EvenCharacteristic or NotASquare.
  Elem sqrt(Elem a) const;
  /// Square root x^(q^2/2) in characteristic 2. Throws InvalidArgument otherwise.
  Elem sqrt_even(Elem a) const;
  /// Square class of a subfield element inside GF(q) (not GF(q^2)).
  /// Throws NotInSubfield.
  bool is_subfield_square(Elem a) const;

  /// {0} followed by beta^0, beta^1, ..., beta^(q-2).
  std::vector<Elem> subfield_elements() const;

  /// Base-p digits of an encoding, lowest first, length 2e.
  std::vector<unsigned> digits(Elem a) const;

 private:
  Field() = default;
  Elem add_digits(Elem a, Elem b) const noexcept;

  unsigned p_ = 0;
  unsigned e_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t q2_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<Elem> exp_;            // length 2(q^2-1)
  std::vector<std::uint32_t> log_;   // log_[0] unused
  std::vector<std::uint32_t> frob_;
  std::vector<std::uint32_t> norm_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> add_table_;  // only for small odd-characteristic fields
};

/// Splits q into (p, e) with q = p^e. Throws NotPrime when q is not a prime power.
std::pair<unsigned, unsigned> prime_power(std::uint64_t q);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace hermit
