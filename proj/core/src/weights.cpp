#include "hermit/weights.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <functional>

#include "hermit/error.hpp"

namespace hermit {

std::string_view filter_name(Filter f) noexcept {
  switch (f) {
    case Filter::All: return "all";
    case Filter::Vertical: return "vertical";
    case Filter::Horizontal: return "horizontal";
    case Filter::NonVerticalLine: return "nonvertical-line";
    case Filter::SlopedLine: return "sloped-line";
  }
  return "unknown";
}

std::optional<Filter> parse_filter(std::string_view name) noexcept {
  for (Filter f : {Filter::All, Filter::Vertical, Filter::Horizontal, Filter::NonVerticalLine, Filter::SlopedLine})
    if (filter_name(f) == name) return f;
  return std::nullopt;
}

std::string_view method_name(Method m) noexcept { return m == Method::Formula ? "formula" : "oracle"; }

std::string_view geometry_name(Geometry g) noexcept {
  switch (g) {
    case Geometry::SameX: return "same-x";
    case Geometry::Collinear: return "collinear";
    case Geometry::XDistinctOrEqual: return "x-distinct-or-equal";
  }
  return "unknown";
}

Count budget_from_env(Count fallback) {
  const char* raw = std::getenv("HERMIT_BUDGET");
  if (raw == nullptr) return fallback;
  long long v = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, v);
  if (ec != std::errc() || ptr != end || v <= 0) {
    throw Error(Errc::InvalidArgument, "HERMIT_BUDGET must be a positive integer");
  }
  return v;
}

namespace {

std::vector<std::vector<std::uint32_t>> filter_lines(const HermitianCurve& curve, Filter filter) {
  const Field& f = curve.field();
  std::vector<std::vector<std::uint32_t>> lines;
  auto add = [&](const Line& line) {
    std::vector<std::uint32_t> idx;
    for (const auto& p : curve.intersect(line).points) idx.push_back(static_cast<std::uint32_t>(curve.index_of(p)));
    std::sort(idx.begin(), idx.end());
    lines.push_back(std::move(idx));
  };
  switch (filter) {
    case Filter::All: break;
    case Filter::Vertical:
      for (std::uint32_t t = 0; t < f.q2(); ++t) add(VerticalLine{Elem{t}});
      break;
    case Filter::Horizontal:
      for (std::uint32_t b = 0; b < f.q2(); ++b) add(AffineLine{Elem{0}, Elem{b}});
      break;
    case Filter::NonVerticalLine:
    case Filter::SlopedLine:
      for (std::uint32_t a = filter == Filter::SlopedLine ? 1 : 0; a < f.q2(); ++a)
        for (std::uint32_t b = 0; b < f.q2(); ++b) add(AffineLine{Elem{a}, Elem{b}});
      break;
  }
  return lines;
}

void check_weight(const HermitianCurve& curve, int w, Filter filter) {
  if (w < 1) throw Error(Errc::InvalidArgument, "weight must be at least 1");
  if (filter != Filter::All && w < 2) {
    throw Error(Errc::InvalidArgument, "a single point does not determine a line; filters need w >= 2");
  }
  if (static_cast<std::size_t>(w) > curve.size()) throw Error(Errc::InvalidArgument, "weight exceeds the length");
}

Count kernel_count_on(const MatrixFq2& h, const std::vector<std::uint32_t>& cols) {
  std::vector<std::size_t> sel(cols.begin(), cols.end());
  return count_full_support_kernel(h.select_columns(sel));
}

// Depth-first walk over the w-subsets whose largest column is fixed. While
// the chosen columns stay independent they are kept in echelon form, each
// basis vector carrying its expression in the chosen columns, so a leaf whose
// last column is dependent yields its one-dimensional kernel directly.
class SupportWalker {
 public:
  SupportWalker(const MatrixFq2& h, int w, std::vector<SupportHit>& out)
      : f_(h.field()), h_(h), w_(w), rows_(h.rows()), out_(out),
        basis_(w, std::vector<Elem>(rows_)), comb_(w, std::vector<Elem>(w)), pivot_(w), chosen_(w),
        v_(rows_), t_(w) {}

  void run(std::uint32_t largest) {
    chosen_[0] = largest;
    if (insert(0)) {
      descend(1, largest, true);
    } else {
      descend(1, largest, false);
    }
  }

 private:
  // Reduces column chosen_[level] against basis_[0..level). Returns true and
  // stores a new basis vector when independent; otherwise t_ holds a kernel
  // vector of the chosen columns with t_[level] = 1.
  bool insert(int level) {
    const std::uint32_t col = chosen_[level];
    for (std::size_t r = 0; r < rows_; ++r) v_[r] = h_(r, col);
    std::fill(t_.begin(), t_.end(), Elem{0});
    t_[level] = f_.one();
    for (int k = 0; k < level; ++k) {
      const Elem c = v_[pivot_[k]];
      if (c.enc == 0) continue;
      for (std::size_t r = 0; r < rows_; ++r) v_[r] = f_.sub(v_[r], f_.mul(c, basis_[k][r]));
      for (int i = 0; i <= level; ++i) t_[i] = f_.sub(t_[i], f_.mul(c, comb_[k][i]));
    }
    std::size_t p = 0;
    while (p < rows_ && v_[p].enc == 0) ++p;
    if (p == rows_) return false;
    const Elem s = f_.inv(v_[p]);
    for (std::size_t r = 0; r < rows_; ++r) basis_[level][r] = f_.mul(v_[r], s);
    for (int i = 0; i < w_; ++i) comb_[level][i] = i <= level ? f_.mul(t_[i], s) : Elem{0};
    pivot_[level] = p;
    return true;
  }

  void descend(int level, std::uint32_t upper, bool independent) {
    if (level == w_) {
      if (!independent) leaf_general();
      return;
    }
    const bool last = level == w_ - 1;
    for (std::uint32_t j = static_cast<std::uint32_t>(w_ - 1 - level); j < upper; ++j) {
      chosen_[level] = j;
      if (!independent) {
        descend(level + 1, j, false);
      } else if (insert(level)) {
        descend(level + 1, j, true);
      } else if (last) {
        leaf_rank_one_kernel();
      } else {
        descend(level + 1, j, false);
      }
    }
  }

  void leaf_rank_one_kernel() {
    for (int i = 0; i < w_; ++i)
      if (t_[i].enc == 0) return;
    record(static_cast<Count>(f_.q2()) - 1);
  }

  void leaf_general() {
    std::vector<std::uint32_t> cols(chosen_.begin(), chosen_.end());
    std::sort(cols.begin(), cols.end());
    const Count n = kernel_count_on(h_, cols);
    if (n != 0) out_.push_back({std::move(cols), n});
  }

  void record(Count n) {
    std::vector<std::uint32_t> cols(chosen_.begin(), chosen_.end());
    std::sort(cols.begin(), cols.end());
    out_.push_back({std::move(cols), n});
  }

  const Field& f_;
  const MatrixFq2& h_;
  int w_;
  std::size_t rows_;
  std::vector<SupportHit>& out_;
  std::vector<std::vector<Elem>> basis_;
  std::vector<std::vector<Elem>> comb_;
  std::vector<std::size_t> pivot_;
  std::vector<std::uint32_t> chosen_;
  std::vector<Elem> v_;
  std::vector<Elem> t_;
};

void for_each_combination(const std::vector<std::uint32_t>& items, int w,
                          const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  const int k = static_cast<int>(items.size());
  if (w > k) return;
  std::vector<int> idx(w);
  for (int i = 0; i < w; ++i) idx[i] = i;
  std::vector<std::uint32_t> pick(w);
  for (;;) {
    for (int i = 0; i < w; ++i) pick[i] = items[idx[i]];
    fn(pick);
    int i = w - 1;
    while (i >= 0 && idx[i] == k - w + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int m = i + 1; m < w; ++m) idx[m] = idx[m - 1] + 1;
  }
}

}  // namespace

Count support_space_size(const HermitianCurve& curve, int w, Filter filter) {
  check_weight(curve, w, filter);
  if (filter == Filter::All) return binom(static_cast<std::int64_t>(curve.size()), w);
  Count total = 0;
  for (const auto& line : filter_lines(curve, filter))
    total = checked_add(total, binom(static_cast<std::int64_t>(line.size()), w));
  return total;
}

std::vector<SupportHit> weight_supports(const HermitianCurve& curve, const MatrixFq2& h, int w, Filter filter,
                                        const OracleOptions& opts) {
  check_weight(curve, w, filter);
  if (h.cols() != curve.size()) throw Error(Errc::InvalidArgument, "parity check does not match the curve");
  const Count space = support_space_size(curve, w, filter);
  if (space > opts.budget) {
    throw Error(Errc::BudgetExceeded, to_string(space) + " supports exceed the budget of " + to_string(opts.budget));
  }

  std::vector<std::vector<SupportHit>> parts;
  if (filter == Filter::All) {
    const std::size_t n = h.cols();
    const std::size_t tasks = n - static_cast<std::size_t>(w) + 1;
    parts.resize(tasks);
    parallel_for(tasks, opts.threads, [&](std::size_t t) {
      SupportWalker walker(h, w, parts[t]);
      walker.run(static_cast<std::uint32_t>(t + static_cast<std::size_t>(w) - 1));
    });
  } else {
    const auto lines = filter_lines(curve, filter);
    parts.resize(lines.size());
    parallel_for(lines.size(), opts.threads, [&](std::size_t t) {
      for_each_combination(lines[t], w, [&](const std::vector<std::uint32_t>& cols) {
        const Count n = kernel_count_on(h, cols);
        if (n != 0) parts[t].push_back({cols, n});
      });
    });
  }

  std::vector<SupportHit> out;
  for (auto& part : parts)
    for (auto& hit : part) out.push_back(std::move(hit));
  return out;
}

WeightReport oracle_count(const HermitianCurve& curve, const CodeSpec& spec, int w, Filter filter,
                          const OracleOptions& opts) {
  const MatrixFq2 h = build_parity_check(curve, spec);
  const auto hits = weight_supports(curve, h, w, filter, opts);
  WeightReport rep;
  rep.spec = spec;
  rep.w = w;
  rep.method = Method::Oracle;
  rep.filter = filter;
  for (const auto& hit : hits) rep.count = checked_add(rep.count, hit.kernel_count);
  rep.solution_tuples = checked_mul(rep.count, factorial(w));
  rep.supports = support_space_size(curve, w, filter);
  return rep;
}

bool satisfies(const Field& f, const std::vector<CurvePoint>& support, Geometry g) {
  if (support.size() < 2) return true;
  const Elem x0 = support[0].x();
  const bool same_x = std::all_of(support.begin(), support.end(), [&](const CurvePoint& p) { return p.x() == x0; });
  switch (g) {
    case Geometry::SameX: return same_x;
    case Geometry::XDistinctOrEqual: {
      if (same_x) return true;
      std::vector<std::uint32_t> xs;
      for (const auto& p : support) xs.push_back(p.x().enc);
      std::sort(xs.begin(), xs.end());
      return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
    }
    case Geometry::Collinear: {
      if (same_x) return true;
      auto other = std::find_if(support.begin(), support.end(), [&](const CurvePoint& p) { return p.x() != x0; });
      const Elem a = f.div(f.sub(other->y(), support[0].y()), f.sub(other->x(), x0));
      const Elem b = f.sub(support[0].y(), f.mul(a, x0));
      return std::all_of(support.begin(), support.end(),
                         [&](const CurvePoint& p) { return f.add(f.mul(a, p.x()), b) == p.y(); });
    }
  }
  return false;
}

GeometryReport support_geometry_check(const HermitianCurve& curve, const CodeSpec& spec, int w, Geometry g,
                                      const OracleOptions& opts) {
  const MatrixFq2 h = build_parity_check(curve, spec);
  const auto hits = weight_supports(curve, h, w, Filter::All, opts);
  GeometryReport rep{g, true, hits.size(), {}};
  for (const auto& hit : hits) {
    std::vector<CurvePoint> pts;
    for (auto c : hit.columns) pts.push_back(curve.points()[c]);
    if (!satisfies(curve.field(), pts, g)) {
      rep.pass = false;
      if (rep.counterexamples.size() < 5) rep.counterexamples.push_back(std::move(pts));
    }
  }
  return rep;
}

}  // namespace hermit
