#include <set>

#include "doctest.h"
#include "hermit/error.hpp"
#include "hermit/gf2q.hpp"
#include "oracles.hpp"

using hermit::Elem;
using hermit::Errc;
using hermit::Field;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const hermit::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidArgument;
}

const std::uint32_t kAllQ[] = {2, 3, 4, 5, 7, 8, 9};

}  // namespace

TEST_SUITE("gf2q") {

TEST_CASE("defining polynomials") {
  const Field f4 = Field::build(2, 1);
  CHECK(f4.modulus() == std::vector<unsigned>{1, 1, 1});
  CHECK(f4.pow(f4.alpha(), 3) == f4.one());
  CHECK(f4.alpha() != f4.one());

  const Field f9 = Field::build(3, 1);
  CHECK(f9.modulus() == std::vector<unsigned>{2, 1, 1});
  CHECK(f9.beta() == Elem{2});
  CHECK(f9.pow(f9.alpha(), 4) == Elem{2});

  const Field f16 = Field::build(2, 2);
  CHECK(f16.q() == 4);
  CHECK(f16.beta() == f16.pow(f16.alpha(), 5));
  CHECK(f16.pow(f16.beta(), 3) == f16.one());
  CHECK(f16.beta() != f16.one());
}

TEST_CASE("modulus is the first candidate with a primitive root") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const Field f = oracle::make_field(q);
    const unsigned n = 2 * f.e();
    const auto& chosen = f.modulus();
    std::uint32_t chosen_code = 0;
    for (unsigned i = n; i-- > 0;) chosen_code = chosen_code * f.p() + chosen[i];
    for (std::uint32_t code = 0; code <= chosen_code; ++code) {
      std::vector<unsigned> m(n + 1, 0);
      m[n] = 1;
      std::uint32_t c = code;
      for (unsigned i = 0; i < n; ++i) {
        m[i] = c % f.p();
        c /= f.p();
      }
      const std::uint32_t order = oracle::PolyRing(f.p(), m).order_of_t();
      if (code == chosen_code) {
        CHECK(order == f.q2() - 1);
      } else {
        CHECK(order != f.q2() - 1);
      }
    }
  }
}

TEST_CASE("multiplication matches schoolbook arithmetic") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field f = oracle::make_field(q);
    const auto ring = oracle::ring_of(f);
    for (std::uint32_t a = 0; a < f.q2(); ++a)
      for (std::uint32_t b = 0; b < f.q2(); ++b) {
        REQUIRE(f.mul(Elem{a}, Elem{b}).enc == ring.mul(a, b));
        REQUIRE(f.add(Elem{a}, Elem{b}).enc == ring.add(a, b));
      }
  }
  for (std::uint32_t q : {7u, 8u, 9u, 16u}) {
    const Field f = oracle::make_field(q);
    const auto ring = oracle::ring_of(f);
    for (int i = 0; i < 2000; ++i) {
      const Elem a = oracle::random_elem(f), b = oracle::random_elem(f);
      REQUIRE(f.mul(a, b).enc == ring.mul(a.enc, b.enc));
      REQUIRE(f.add(a, b).enc == ring.add(a.enc, b.enc));
      REQUIRE(f.add(f.sub(a, b), b) == a);
    }
  }
}

TEST_CASE("small arithmetic examples") {
  const Field f9 = Field::build(3, 1);
  CHECK(f9.add(Elem{1}, Elem{2}) == f9.zero());
  const Field f4 = Field::build(2, 1);
  CHECK(f4.mul(f4.alpha(), f4.alpha()) == f4.add(f4.alpha(), f4.one()));
  for (std::uint32_t q : kAllQ) {
    const Field f = oracle::make_field(q);
    for (std::uint32_t a = 1; a < f.q2(); ++a) {
      REQUIRE(f.pow(Elem{a}, f.q2() - 1) == f.one());
      REQUIRE(f.mul(Elem{a}, f.inv(Elem{a})) == f.one());
      REQUIRE(f.exp(f.log(Elem{a})) == Elem{a});
    }
  }
}

TEST_CASE("norm and trace examples") {
  const Field f4 = Field::build(2, 1);
  const Field f9 = Field::build(3, 1);
  CHECK(f9.norm(f9.zero()) == f9.zero());
  CHECK(f9.norm(f9.alpha()) == Elem{2});
  CHECK(f9.trace(f9.alpha()) == Elem{2});
  CHECK(f4.trace(f4.zero()) == f4.zero());
  CHECK(f4.trace(f4.alpha()) == f4.one());
  for (std::uint32_t a = 1; a < 4; ++a) CHECK(f4.norm(Elem{a}) == f4.one());
  CHECK(f4.frobenius(f4.alpha()) == f4.mul(f4.alpha(), f4.alpha()));
}

TEST_CASE("norm, trace and frobenius agree with repeated multiplication") {
  for (std::uint32_t q : kAllQ) {
    const Field f = oracle::make_field(q);
    const auto ring = oracle::ring_of(f);
    for (std::uint32_t a = 0; a < f.q2(); ++a) {
      const std::uint32_t frob = ring.pow(a, q);
      REQUIRE(f.frobenius(Elem{a}).enc == frob);
      REQUIRE(f.norm(Elem{a}).enc == ring.mul(frob, a));
      REQUIRE(f.trace(Elem{a}).enc == ring.add(frob, a));
      REQUIRE(f.frobenius(f.frobenius(Elem{a})) == Elem{a});
      REQUIRE(f.in_subfield(f.norm(Elem{a})));
      REQUIRE(f.in_subfield(f.trace(Elem{a})));
    }
  }
}

TEST_CASE("subfield structure") {
  for (std::uint32_t q : kAllQ) {
    const Field f = oracle::make_field(q);
    std::set<std::uint32_t> fixed;
    for (std::uint32_t a = 0; a < f.q2(); ++a)
      if (f.frobenius(Elem{a}) == Elem{a}) fixed.insert(a);
    std::set<std::uint32_t> listed;
    for (Elem e : f.subfield_elements()) listed.insert(e.enc);
    CHECK(fixed == listed);
    CHECK(listed.size() == q);
    // beta has order exactly q-1
    Elem x = f.beta();
    std::uint32_t order = 1;
    while (x != f.one()) {
      x = f.mul(x, f.beta());
      ++order;
    }
    CHECK(order == q - 1);
  }
}

TEST_CASE("trace down to the prime field") {
  const Field f4 = Field::build(2, 1);
  CHECK(f4.subfield_trace_to_prime(f4.one()) == f4.one());
  CHECK(f4.subfield_trace_to_prime(f4.zero()) == f4.zero());
  const Field f16 = Field::build(2, 2);
  CHECK(f16.subfield_trace_to_prime(f16.beta()) == f16.one());
  CHECK(code_of([&] { f16.subfield_trace_to_prime(f16.alpha()); }) == Errc::NotInSubfield);
  for (std::uint32_t q : kAllQ) {
    const Field f = oracle::make_field(q);
    for (Elem x : f.subfield_elements()) CHECK(f.subfield_trace_to_prime(x).enc < f.p());
  }
}

TEST_CASE("squares and square roots") {
  const Field f9 = Field::build(3, 1);
  CHECK(f9.is_square(Elem{2}));
  CHECK_FALSE(f9.is_square(f9.alpha()));
  CHECK(f9.sqrt(f9.one()) == f9.one());
  CHECK(f9.sqrt(f9.zero()) == f9.zero());
  CHECK(code_of([&] { f9.sqrt(f9.alpha()); }) == Errc::NotASquare);
  const Field f16 = Field::build(2, 2);
  CHECK(code_of([&] { f16.sqrt(f16.alpha()); }) == Errc::EvenCharacteristic);
  for (std::uint32_t a = 0; a < f16.q2(); ++a) {
    const Elem r = f16.sqrt_even(Elem{a});
    CHECK(f16.mul(r, r) == Elem{a});
  }
  for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
    const Field f = oracle::make_field(q);
    std::set<std::uint32_t> squares;
    for (std::uint32_t a = 0; a < f.q2(); ++a) squares.insert(f.mul(Elem{a}, Elem{a}).enc);
    std::set<std::uint32_t> sub_squares;
    for (Elem x : f.subfield_elements()) sub_squares.insert(f.mul(x, x).enc);
    for (std::uint32_t a = 0; a < f.q2(); ++a) {
      REQUIRE(f.is_square(Elem{a}) == (squares.count(a) == 1));
      if (f.is_square(Elem{a})) {
        const Elem r = f.sqrt(Elem{a});
        REQUIRE(f.mul(r, r) == Elem{a});
      }
    }
    for (Elem x : f.subfield_elements()) CHECK(f.is_subfield_square(x) == (sub_squares.count(x.enc) == 1));
  }
}

TEST_CASE("solution counts of y^q + y = t, x^(q+1) = t and x^(q-1) = t") {
  for (std::uint32_t q : kAllQ) {
    const Field f = oracle::make_field(q);
    const auto ring = oracle::ring_of(f);
    std::map<std::uint32_t, int> trace_fibre, norm_fibre, power_fibre;
    for (std::uint32_t a = 0; a < f.q2(); ++a) {
      const std::uint32_t aq = ring.pow(a, q);
      ++trace_fibre[ring.add(aq, a)];
      ++norm_fibre[ring.mul(aq, a)];
      if (a != 0) ++power_fibre[ring.pow(a, q - 1)];
    }
    for (Elem t : f.subfield_elements()) {
      CHECK(trace_fibre[t.enc] == static_cast<int>(q));
      CHECK(norm_fibre[t.enc] == (t.enc == 0 ? 1 : static_cast<int>(q + 1)));
    }
    for (std::uint32_t t = 1; t < f.q2(); ++t) {
      const bool unit_norm = f.norm(Elem{t}) == f.one();
      CHECK(power_fibre[t] == (unit_norm ? static_cast<int>(q - 1) : 0));
    }
  }
}

TEST_CASE("norm is multiplicative and trace is subfield-linear") {
  for (std::uint32_t q : kAllQ) {
    const Field f = oracle::make_field(q);
    const auto sub = f.subfield_elements();
    for (int i = 0; i < 300; ++i) {
      const Elem a = oracle::random_elem(f), b = oracle::random_elem(f);
      const Elem w = sub[oracle::rng()() % sub.size()];
      CHECK(f.norm(f.mul(a, b)) == f.mul(f.norm(a), f.norm(b)));
      CHECK(f.trace(f.add(f.mul(w, a), b)) == f.add(f.mul(w, f.trace(a)), f.trace(b)));
      if (f.odd()) CHECK(f.mul(f.from_int(4), f.norm(a)) == f.norm(f.mul(f.from_int(2), a)));
    }
  }
}

TEST_CASE("construction errors") {
  CHECK(code_of([] { Field::build(4, 1); }) == Errc::NotPrime);
  CHECK(code_of([] { Field::build(2, 9); }) == Errc::FieldTooLarge);
  CHECK(code_of([] { hermit::prime_power(12); }) == Errc::NotPrime);
  CHECK(hermit::prime_power(243) == std::pair<unsigned, unsigned>{3, 5});
  const Field f = Field::build(2, 8);
  CHECK(f.q() == 256);
  CHECK(code_of([&] { f.inv(f.zero()); }) == Errc::DivisionByZero);
  CHECK(code_of([&] { f.element(f.q2()); }) == Errc::InvalidArgument);
}

}  // TEST_SUITE
