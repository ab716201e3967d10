#pragma once

// Brute-force codeword counting. A codeword of weight w of the code with
// parity check H is a support S of w columns together with a kernel vector
// of H[:, S] that has no zero entry, so
//   A_w = sum over w-subsets S of #full-support kernel vectors of H[:, S].

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hermit/curve.hpp"
#include "hermit/hermcodes.hpp"
#include "hermit/parallel.hpp"

namespace hermit {

enum class Filter {
  All,
  Vertical,         // support on one line x = t
  Horizontal,       // support on one line y = b
  NonVerticalLine,  // support on one line y = a x + b, any a
  SlopedLine,       // support on one line y = a x + b with a != 0
};

std::string_view filter_name(Filter f) noexcept;
std::optional<Filter> parse_filter(std::string_view name) noexcept;

enum class Method { Formula, Oracle };

std::string_view method_name(Method m) noexcept;

/// C(64, 5): the largest support space the acceptance runs need.
inline constexpr Count kDefaultBudget = 7624512;

/// HERMIT_BUDGET when set to a positive integer, else the fallback.
Count budget_from_env(Count fallback = kDefaultBudget);

struct OracleOptions {
  unsigned threads = default_threads();
  Count budget = kDefaultBudget;  // maximum number of supports examined
};

struct SupportHit {
  std::vector<std::uint32_t> columns;  // ascending point indices
  Count kernel_count = 0;
};

/// Number of supports the oracle would examine. Filters need w >= 2.
Count support_space_size(const HermitianCurve& curve, int w, Filter filter);

/// Every support with a nonzero count, in a deterministic order independent
/// of the thread count. Throws BudgetExceeded before doing any work.
std::vector<SupportHit> weight_supports(const HermitianCurve& curve, const MatrixFq2& h, int w, Filter filter,
                                        const OracleOptions& opts = {});

struct WeightReport {
  CodeSpec spec;
  int w = 0;
  Count count = 0;
  Method method = Method::Oracle;
  Filter filter = Filter::All;
  Count solution_tuples = 0;  // ordered representations: count * w!
  Count supports = 0;         // supports examined (oracle) or 0
};

WeightReport oracle_count(const HermitianCurve& curve, const CodeSpec& spec, int w, Filter filter = Filter::All,
                          const OracleOptions& opts = {});

enum class Geometry {
  SameX,              // all points on one vertical line
  Collinear,          // all points on one line
  XDistinctOrEqual,   // x-coordinates pairwise distinct, or all equal
};

std::string_view geometry_name(Geometry g) noexcept;

bool satisfies(const Field& f, const std::vector<CurvePoint>& support, Geometry g);

struct GeometryReport {
  Geometry geometry;
  bool pass = true;
  std::size_t supports = 0;
  std::vector<std::vector<CurvePoint>> counterexamples;  // at most a few
};

GeometryReport support_geometry_check(const HermitianCurve& curve, const CodeSpec& spec, int w, Geometry g,
                                      const OracleOptions& opts = {});

}  // namespace hermit
