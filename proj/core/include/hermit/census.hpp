#pragma once

#include <map>
#include <string_view>

#include "hermit/count.hpp"
#include "hermit/gf2q.hpp"
#include "hermit/parallel.hpp"

namespace hermit {

enum class Universe { Parabolas, NonVerticalLines, VerticalLines };

enum class CensusMode { Brute, Formula };

std::string_view universe_name(Universe u) noexcept;

/// q^4(q^2-1), q^4 or q^2.
Count universe_size(std::uint32_t q, Universe u);

struct CensusHistogram {
  Universe universe;
  std::uint32_t q = 0;
  /// Every admissible intersection number is a key, even when its count is 0.
  std::map<int, Count> counts;

  Count total() const;
  bool operator==(const CensusHistogram&) const = default;
};

inline constexpr std::uint32_t kDefaultBruteLimit = 9;

/// Direct loop over all (a, b, c, x) with a != 0, split by a across threads.
/// Throws BruteLimitExceeded when q > brute_limit and InadmissibleCount on
/// any count outside the admissible set.
CensusHistogram parabola_census_brute(const Field& f, unsigned threads = default_threads(),
                                      std::uint32_t brute_limit = kDefaultBruteLimit);

/// Closed-form cell counts; colliding cells (q = 2) are merged.
CensusHistogram parabola_census_formula(const Field& f);

struct LineCensus {
  CensusHistogram non_vertical;
  CensusHistogram vertical;
};

LineCensus line_census_brute(const Field& f);
LineCensus line_census_formula(const Field& f);
LineCensus line_census(const Field& f, CensusMode mode);

/// N_k for 4 <= k <= 2q: parabolas meeting the curve in k points plus
/// non-vertical lines doing so (only k = q+1 contributes).
std::map<int, Count> n_k_table(const Field& f, CensusMode mode, unsigned threads = default_threads());

/// sum_k N_k C(k, 4).
Count n_k_weighted_sum(const std::map<int, Count>& n_k);

}  // namespace hermit
