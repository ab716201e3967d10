#include "doctest.h"
#include "hermit/census.hpp"
#include "hermit/curve.hpp"
#include "hermit/error.hpp"
#include "oracles.hpp"

using hermit::CensusMode;
using hermit::Count;
using hermit::Field;
using Hist = std::map<int, Count>;

TEST_SUITE("census") {

TEST_CASE("parabola census at q = 2, 3, 4") {
  const Field f2 = oracle::make_field(2);
  CHECK(hermit::parabola_census_brute(f2).counts == Hist{{1, 24}, {3, 24}});
  CHECK(hermit::parabola_census_formula(f2).counts == Hist{{1, 24}, {3, 24}});

  const Field f3 = oracle::make_field(3);
  const Hist odd{{0, 36}, {1, 0}, {2, 216}, {3, 252}, {4, 0}, {5, 108}, {6, 36}};
  CHECK(hermit::parabola_census_brute(f3).counts == odd);
  CHECK(hermit::parabola_census_formula(f3).counts == odd);
  CHECK(hermit::parabola_census_formula(f3).total() == 648);

  const Field f4 = oracle::make_field(4);
  const Hist even{{1, 320}, {3, 1920}, {5, 960}, {7, 640}};
  CHECK(hermit::parabola_census_brute(f4).counts == even);
  CHECK(hermit::parabola_census_formula(f4).counts == even);
}

TEST_CASE("brute and formula censuses agree") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    const Field f = oracle::make_field(q);
    const auto brute = hermit::parabola_census_brute(f, 2);
    const auto formula = hermit::parabola_census_formula(f);
    CHECK(brute == formula);
    CHECK(brute.total() == hermit::universe_size(q, hermit::Universe::Parabolas));
  }
}

TEST_CASE("census does not depend on the thread count") {
  const Field f = oracle::make_field(5);
  CHECK(hermit::parabola_census_brute(f, 1) == hermit::parabola_census_brute(f, 7));
}

TEST_CASE("vanishing cells") {
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    const auto h = hermit::parabola_census_formula(oracle::make_field(q));
    const bool vanish = h.counts.at(1) == 0 && h.counts.at(static_cast<int>(q) + 1) == 0;
    CHECK(vanish == (q == 3));
  }
  // at q = 2 the k = 1 and k = q+1 cells merge into k = q-1 and k = 2q-1;
  // the merged values equal those two cells alone
  const auto h2 = hermit::parabola_census_formula(oracle::make_field(2));
  CHECK(h2.counts.at(1) == 8 * 3 * 1 * 2 / 2);
  CHECK(h2.counts.at(3) == 8 * 3 * 2 / 2);
  for (std::uint32_t q : {4u, 8u, 16u}) {
    const auto h = hermit::parabola_census_formula(oracle::make_field(q));
    CHECK(h.counts.at(1) != 0);
    CHECK(h.counts.at(static_cast<int>(q) + 1) != 0);
  }
}

TEST_CASE("line census") {
  const Field f2 = oracle::make_field(2);
  CHECK(hermit::line_census_brute(f2).non_vertical.counts == Hist{{1, 8}, {3, 8}});
  const Field f3 = oracle::make_field(3);
  CHECK(hermit::line_census_brute(f3).non_vertical.counts == Hist{{1, 27}, {4, 54}});
  CHECK(hermit::line_census_brute(f3).vertical.counts == Hist{{3, 9}});
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field f = oracle::make_field(q);
    const auto brute = hermit::line_census_brute(f);
    const auto formula = hermit::line_census_formula(f);
    CHECK(brute.non_vertical == formula.non_vertical);
    CHECK(brute.vertical == formula.vertical);
    CHECK(brute.non_vertical.total() == hermit::universe_size(q, hermit::Universe::NonVerticalLines));
    CHECK(brute.vertical.total() == hermit::universe_size(q, hermit::Universe::VerticalLines));
  }
}

TEST_CASE("N_k table") {
  const Field f3 = oracle::make_field(3);
  const auto n3 = hermit::n_k_table(f3, CensusMode::Brute);
  CHECK(n3 == Hist{{4, 54}, {5, 108}, {6, 36}});
  CHECK(n3 == hermit::n_k_table(f3, CensusMode::Formula));
  CHECK(hermit::n_k_weighted_sum(n3) == 1134);

  const Field f4 = oracle::make_field(4);
  const auto n4 = hermit::n_k_table(f4, CensusMode::Formula);
  CHECK(n4 == Hist{{4, 0}, {5, 1152}, {6, 0}, {7, 640}, {8, 0}});
  CHECK(n4 == hermit::n_k_table(f4, CensusMode::Brute));
}

TEST_CASE("brute limit") {
  const Field f = oracle::make_field(11);
  try {
    hermit::parabola_census_brute(f);
    FAIL("expected BruteLimitExceeded");
  } catch (const hermit::Error& e) {
    CHECK(e.code() == hermit::Errc::BruteLimitExceeded);
  }
}

}  // TEST_SUITE
