#include "hermit/gf2q.hpp"

#include <string>

#include "hermit/error.hpp"

namespace hermit {

namespace {

using Poly = std::vector<unsigned>;  // coefficients over GF(p), lowest first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  const std::size_t dm = m.size() - 1;
  trim(a);
  while (a.size() > dm) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - (lead * m[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t n, const Poly& m, unsigned p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (n != 0) {
    if (n & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    n >>= 1;
  }
  return r;
}

bool is_one(const Poly& a) { return a.size() == 1 && a[0] == 1; }

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, unsigned p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<unsigned, unsigned> prime_power(std::uint64_t q) {
  if (q < 2) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
  return {static_cast<unsigned>(p), e};
}

Field Field::build(unsigned p, unsigned e, std::uint32_t table_limit) {
  if (e == 0) throw Error(Errc::InvalidArgument, "extension degree must be positive");
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");

  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q * q > table_limit) {
      throw Error(Errc::FieldTooLarge, "q^2 exceeds the table limit " + std::to_string(table_limit));
    }
  }
  const std::uint64_t q2 = q * q;
  const unsigned n = 2 * e;

  Field f;
  f.p_ = p;
  f.e_ = e;
  f.q_ = static_cast<std::uint32_t>(q);
  f.q2_ = static_cast<std::uint32_t>(q2);

  // Candidates t^n + c_{n-1} t^{n-1} + ... + c_0 in increasing order of
  // sum c_i p^i, i.e. lexicographic from the highest free coefficient.
  const auto factors = prime_factors(q2 - 1);
  const Poly t{0, 1};
  bool found = false;
  for (std::uint64_t code = 0; code < q2 && !found; ++code) {
    Poly m(n + 1, 0);
    m[n] = 1;
    std::uint64_t c = code;
    for (unsigned i = 0; i < n; ++i) {
      m[i] = static_cast<unsigned>(c % p);
      c /= p;
    }
    if (m[0] == 0 || !is_irreducible(m, p)) continue;
    bool primitive = true;
    for (auto r : factors) {
      if (is_one(poly_powmod(t, (q2 - 1) / r, m, p))) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;
    f.modulus_ = m;
    found = true;
  }
  if (!found) throw Error(Errc::InvalidArgument, "no primitive defining polynomial found");

  const std::uint32_t order = f.q2_ - 1;
  f.exp_.assign(2 * static_cast<std::size_t>(order), Elem{0});
  f.log_.assign(f.q2_, 0);
  std::vector<bool> seen(f.q2_, false);

  // Walk the powers of t, multiplying by t and reducing with the monic modulus.
  std::vector<unsigned> cur(n, 0);
  cur[0] = 1;
  for (std::uint32_t k = 0; k < order; ++k) {
    std::uint32_t enc = 0;
    for (unsigned i = n; i-- > 0;) enc = enc * p + cur[i];
    if (enc == 0 || seen[enc]) throw Error(Errc::InvalidArgument, "defining polynomial root is not primitive");
    seen[enc] = true;
    f.exp_[k] = Elem{enc};
    f.exp_[k + order] = Elem{enc};
    f.log_[enc] = k;

    const unsigned top = cur[n - 1];
    for (unsigned i = n - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (unsigned i = 0; i < n; ++i) cur[i] = (cur[i] + p - (top * f.modulus_[i]) % p) % p;
  }
  // alpha^(q^2-1) must be 1
  for (unsigned i = 0; i < n; ++i) {
    if (cur[i] != (i == 0 ? 1u : 0u)) throw Error(Errc::InvalidArgument, "alpha order is not q^2-1");
  }

  if (p != 2 && q2 <= 1024) {
    f.add_table_.resize(q2 * q2);
    for (std::uint32_t a = 0; a < f.q2_; ++a)
      for (std::uint32_t b = 0; b < f.q2_; ++b)
        f.add_table_[a * f.q2_ + b] = f.add_digits(Elem{a}, Elem{b}).enc;
  }

  f.neg_.resize(f.q2_);
  f.frob_.resize(f.q2_);
  f.norm_.resize(f.q2_);
  for (std::uint32_t a = 0; a < f.q2_; ++a) {
    std::uint32_t neg = 0;
    std::uint32_t place = 1;
    for (std::uint32_t rest = a; rest != 0; rest /= p, place *= p) {
      const unsigned d = rest % p;
      neg += ((p - d) % p) * place;
    }
    f.neg_[a] = neg;
    if (a == 0) {
      f.frob_[a] = 0;
      f.norm_[a] = 0;
    } else {
      const std::uint64_t l = f.log_[a];
      f.frob_[a] = f.exp_[(l * q) % order].enc;
      f.norm_[a] = f.exp_[(l * (q + 1)) % order].enc;
    }
  }
  return f;
}

Elem Field::add_digits(Elem a, Elem b) const noexcept {
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  std::uint32_t x = a.enc;
  std::uint32_t y = b.enc;
  while (x != 0 || y != 0) {
    out += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return Elem{out};
}

Elem Field::from_int(std::int64_t v) const noexcept {
  const std::int64_t pp = p_;
  return Elem{static_cast<std::uint32_t>(((v % pp) + pp) % pp)};
}

Elem Field::element(std::uint32_t enc) const {
  if (enc >= q2_) throw Error(Errc::InvalidArgument, "encoding " + std::to_string(enc) + " out of range");
  return Elem{enc};
}

Elem Field::inv(Elem a) const {
  if (a.enc == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  const std::uint32_t order = q2_ - 1;
  return exp_[(order - log_[a.enc]) % order];
}

Elem Field::pow(Elem a, std::int64_t n) const {
  if (a.enc == 0) {
    if (n > 0) return zero();
    if (n == 0) return one();
    throw Error(Errc::DivisionByZero, "negative power of zero");
  }
  const std::int64_t order = q2_ - 1;
  std::int64_t k = n % order;
  if (k < 0) k += order;
  const std::int64_t l = (static_cast<std::int64_t>(log_[a.enc]) * k) % order;
  return exp_[static_cast<std::size_t>(l)];
}

std::uint32_t Field::log(Elem a) const {
  if (a.enc == 0) throw Error(Errc::DivisionByZero, "logarithm of zero");
  return log_[a.enc];
}

Elem Field::exp(std::int64_t k) const noexcept {
  const std::int64_t order = q2_ - 1;
  std::int64_t r = k % order;
  if (r < 0) r += order;
  return exp_[static_cast<std::size_t>(r)];
}

Elem Field::subfield_trace_to_prime(Elem x) const {
  if (!in_subfield(x)) throw Error(Errc::NotInSubfield, "element " + std::to_string(x.enc) + " is not in GF(q)");
  Elem acc = zero();
  Elem term = x;
  for (unsigned i = 0; i < e_; ++i) {
    acc = add(acc, term);
    term = pow(term, p_);
  }
  return acc;
}

bool Field::is_square(Elem a) const noexcept {
  if (a.enc == 0 || p_ == 2) return true;
  return log_[a.enc] % 2 == 0;
}

Elem Field::sqrt(Elem a) const {
  if (p_ == 2) throw Error(Errc::EvenCharacteristic, "use sqrt_even in characteristic 2");
  if (a.enc == 0) return zero();
  const std::uint32_t l = log_[a.enc];
  if (l % 2 != 0) throw Error(Errc::NotASquare, "element " + std::to_string(a.enc) + " is not a square");
  return exp_[l / 2];
}

Elem Field::sqrt_even(Elem a) const {
  if (p_ != 2) throw Error(Errc::InvalidArgument, "sqrt_even requires characteristic 2");
  return pow(a, q2_ / 2);
}

bool Field::is_subfield_square(Elem a) const {
  if (!in_subfield(a)) throw Error(Errc::NotInSubfield, "element " + std::to_string(a.enc) + " is not in GF(q)");
  if (a.enc == 0 || p_ == 2) return true;
  return (log_[a.enc] / (q_ + 1)) % 2 == 0;
}

std::vector<Elem> Field::subfield_elements() const {
  std::vector<Elem> out;
  out.reserve(q_);
  out.push_back(zero());
  for (std::uint32_t i = 0; i + 1 < q_; ++i) out.push_back(exp_[static_cast<std::size_t>(i) * (q_ + 1)]);
  return out;
}

std::vector<unsigned> Field::digits(Elem a) const {
  std::vector<unsigned> out(2 * e_, 0);
  std::uint32_t x = a.enc;
  for (auto& d : out) {
    d = x % p_;
    x /= p_;
  }
  return out;
}

}  // namespace hermit
