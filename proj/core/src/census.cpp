#include "hermit/census.hpp"

#include <string>
#include <vector>

#include "hermit/curve.hpp"
#include "hermit/error.hpp"

namespace hermit {

std::string_view universe_name(Universe u) noexcept {
  switch (u) {
    case Universe::Parabolas: return "parabolas";
    case Universe::NonVerticalLines: return "non-vertical-lines";
    case Universe::VerticalLines: return "vertical-lines";
  }
  return "unknown";
}

Count universe_size(std::uint32_t q, Universe u) {
  const Count qq = q;
  switch (u) {
    case Universe::Parabolas: return checked_mul(ipow(qq, 4), checked_sub(qq * qq, 1));
    case Universe::NonVerticalLines: return ipow(qq, 4);
    case Universe::VerticalLines: return qq * qq;
  }
  return 0;
}

Count CensusHistogram::total() const {
  Count t = 0;
  for (const auto& [k, n] : counts) t = checked_add(t, n);
  return t;
}

namespace {

CensusHistogram empty_parabola_histogram(const Field& f) {
  CensusHistogram h{Universe::Parabolas, f.q(), {}};
  for (int k : admissible_parabola_counts(f)) h.counts[k] = 0;
  return h;
}

}  // namespace

CensusHistogram parabola_census_brute(const Field& f, unsigned threads, std::uint32_t brute_limit) {
  if (f.q() > brute_limit) {
    throw Error(Errc::BruteLimitExceeded,
                "q = " + std::to_string(f.q()) + " exceeds the brute limit " + std::to_string(brute_limit));
  }
  const std::uint32_t q2 = f.q2();
  const int max_k = 2 * static_cast<int>(f.q());

  std::vector<Elem> norm(q2), square(q2);
  for (std::uint32_t x = 0; x < q2; ++x) {
    norm[x] = f.norm(Elem{x});
    square[x] = f.mul(Elem{x}, Elem{x});
  }

  // one slot per nonzero a; raw[a-1][k] counts parabolas with k points
  std::vector<std::vector<Count>> raw(q2 - 1, std::vector<Count>(q2 + 1, 0));
  parallel_for(q2 - 1, threads, [&](std::size_t task) {
    const Elem a{static_cast<std::uint32_t>(task + 1)};
    auto& slot = raw[task];
    for (std::uint32_t b = 0; b < q2; ++b) {
      for (std::uint32_t c = 0; c < q2; ++c) {
        int k = 0;
        for (std::uint32_t x = 0; x < q2; ++x) {
          const Elem y = f.add(f.add(f.mul(a, square[x]), f.mul(Elem{b}, Elem{x})), Elem{c});
          if (f.trace(y) == norm[x]) ++k;
        }
        ++slot[k];
      }
    }
  });

  CensusHistogram h = empty_parabola_histogram(f);
  for (const auto& slot : raw) {
    for (std::uint32_t k = 0; k < slot.size(); ++k) {
      if (slot[k] == 0) continue;
      auto it = h.counts.find(static_cast<int>(k));
      if (it == h.counts.end() || static_cast<int>(k) > max_k) {
        throw Error(Errc::InadmissibleCount, "a parabola meets the curve in " + std::to_string(k) + " points");
      }
      it->second = checked_add(it->second, slot[k]);
    }
  }
  return h;
}

CensusHistogram parabola_census_formula(const Field& f) {
  const Count q = f.q();
  CensusHistogram h = empty_parabola_histogram(f);
  auto put = [&](Count k, Count n) {
    auto& cell = h.counts[static_cast<int>(k)];
    cell = checked_add(cell, n);
  };

  if (f.odd()) {
    const Count base = checked_mul(q * q, q + 1);
    put(0, checked_mul(base, exact_div(q - 1, 2)));
    put(1, checked_mul(base, exact_div(q * (q - 3), 2)));
    put(q - 1, checked_mul(base, exact_div(q * (q - 1) * (q - 1), 2)));
    put(q, checked_mul(base, q * q - q + 1));
    put(q + 1, checked_mul(base, exact_div(q * (q - 1) * (q - 3), 2)));
    put(2 * q - 1, checked_mul(base, exact_div(q * (q - 1), 2)));
    put(2 * q, checked_mul(base, exact_div(q - 1, 2)));
  } else {
    const Count base = checked_mul(ipow(q, 3), q + 1);
    const Count half = exact_div(q, 2);
    put(1, checked_mul(base, half - 1));
    put(q - 1, checked_mul(base, (q - 1) * half));
    put(q + 1, checked_mul(base, (q - 1) * (half - 1)));
    put(2 * q - 1, checked_mul(base, half));
  }
  return h;
}

LineCensus line_census_brute(const Field& f) {
  const HermitianCurve curve(f);
  const int q = static_cast<int>(f.q());
  LineCensus out{{Universe::NonVerticalLines, f.q(), {{1, 0}, {q + 1, 0}}},
                 {Universe::VerticalLines, f.q(), {{q, 0}}}};
  for (std::uint32_t a = 0; a < f.q2(); ++a) {
    for (std::uint32_t b = 0; b < f.q2(); ++b) {
      const int k = curve.intersect(Line{AffineLine{Elem{a}, Elem{b}}}).count;
      auto it = out.non_vertical.counts.find(k);
      if (it == out.non_vertical.counts.end())
        throw Error(Errc::InadmissibleCount, "a line meets the curve in " + std::to_string(k) + " points");
      ++it->second;
    }
  }
  for (std::uint32_t t = 0; t < f.q2(); ++t) {
    const int k = curve.intersect(Line{VerticalLine{Elem{t}}}).count;
    auto it = out.vertical.counts.find(k);
    if (it == out.vertical.counts.end())
      throw Error(Errc::InadmissibleCount, "a vertical line meets the curve in " + std::to_string(k) + " points");
    ++it->second;
  }
  return out;
}

LineCensus line_census_formula(const Field& f) {
  const Count q = f.q();
  const Count q3 = ipow(q, 3);
  return {{Universe::NonVerticalLines, f.q(), {{1, q3}, {static_cast<int>(q + 1), checked_sub(ipow(q, 4), q3)}}},
          {Universe::VerticalLines, f.q(), {{static_cast<int>(q), q * q}}}};
}

LineCensus line_census(const Field& f, CensusMode mode) {
  return mode == CensusMode::Brute ? line_census_brute(f) : line_census_formula(f);
}

std::map<int, Count> n_k_table(const Field& f, CensusMode mode, unsigned threads) {
  const int q = static_cast<int>(f.q());
  const CensusHistogram parabolas =
      mode == CensusMode::Brute ? parabola_census_brute(f, threads) : parabola_census_formula(f);
  const LineCensus lines = line_census(f, mode);

  std::map<int, Count> out;
  for (int k = 4; k <= 2 * q; ++k) {
    Count n = 0;
    if (auto it = parabolas.counts.find(k); it != parabolas.counts.end()) n = checked_add(n, it->second);
    if (auto it = lines.non_vertical.counts.find(k); it != lines.non_vertical.counts.end()) n = checked_add(n, it->second);
    out[k] = n;
  }
  return out;
}

Count n_k_weighted_sum(const std::map<int, Count>& n_k) {
  Count s = 0;
  for (const auto& [k, n] : n_k) s = checked_add(s, checked_mul(n, binom(k, 4)));
  return s;
}

}  // namespace hermit
