#pragma once

// Slow reference implementations used only to check the library.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "hermit/gf2q.hpp"

namespace oracle {

// Arithmetic on coefficient vectors modulo a monic polynomial, by schoolbook
// multiplication and long division. Shares nothing with the table code.
class PolyRing {
 public:
  PolyRing(unsigned p, std::vector<unsigned> modulus) : p_(p), mod_(std::move(modulus)), n_(mod_.size() - 1) {}

  std::uint32_t size() const {
    std::uint32_t s = 1;
    for (unsigned i = 0; i < n_; ++i) s *= p_;
    return s;
  }

  std::vector<unsigned> decode(std::uint32_t enc) const {
    std::vector<unsigned> c(n_, 0);
    for (unsigned i = 0; i < n_; ++i) {
      c[i] = enc % p_;
      enc /= p_;
    }
    return c;
  }

  std::uint32_t encode(const std::vector<unsigned>& c) const {
    std::uint32_t enc = 0;
    for (unsigned i = n_; i-- > 0;) enc = enc * p_ + c[i];
    return enc;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = decode(a), y = decode(b);
    for (unsigned i = 0; i < n_; ++i) x[i] = (x[i] + y[i]) % p_;
    return encode(x);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const auto x = decode(a), y = decode(b);
    std::vector<unsigned> r(2 * n_, 0);
    for (unsigned i = 0; i < n_; ++i)
      for (unsigned j = 0; j < n_; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p_;
    for (unsigned d = 2 * n_ - 1; d >= n_; --d) {
      const unsigned lead = r[d];
      if (lead == 0) continue;
      for (unsigned i = 0; i <= n_; ++i) r[d - n_ + i] = (r[d - n_ + i] + p_ * p_ - lead * mod_[i] % p_) % p_;
    }
    r.resize(n_);
    return encode(r);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const {
    std::uint32_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  // Multiplicative order of the class of t, 0 if t is nilpotent or the
  // order exceeds size().
  std::uint32_t order_of_t() const {
    const std::uint32_t t = p_;  // encoding of the polynomial t
    std::uint32_t cur = t;
    for (std::uint32_t k = 1; k <= size(); ++k) {
      if (cur == 1) return k;
      if (cur == 0) return 0;
      cur = mul(cur, t);
    }
    return 0;
  }

 private:
  unsigned p_;
  std::vector<unsigned> mod_;
  unsigned n_;
};

inline hermit::Field make_field(std::uint32_t q) {
  const auto [p, e] = hermit::prime_power(q);
  return hermit::Field::build(p, e);
}

inline PolyRing ring_of(const hermit::Field& f) { return PolyRing(f.p(), f.modulus()); }

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline hermit::Elem random_elem(const hermit::Field& f) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.q2() - 1);
  return hermit::Elem{d(rng())};
}

inline hermit::Elem random_nonzero(const hermit::Field& f) {
  std::uniform_int_distribution<std::uint32_t> d(1, f.q2() - 1);
  return hermit::Elem{d(rng())};
}

}  // namespace oracle
