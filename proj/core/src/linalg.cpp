#include "hermit/linalg.hpp"

#include <utility>

#include "hermit/error.hpp"

namespace hermit {

MatrixFq2::MatrixFq2(const Field& f, std::size_t rows, std::size_t cols)
    : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, Elem{0}) {}

MatrixFq2 MatrixFq2::select_columns(const std::vector<std::size_t>& cols) const {
  MatrixFq2 out(*field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] >= cols_) throw Error(Errc::InvalidArgument, "column index out of range");
      out(r, j) = (*this)(r, cols[j]);
    }
  return out;
}

RrefResult rref(const MatrixFq2& m) {
  const Field& f = m.field();
  RrefResult res{m, {}};
  MatrixFq2& a = res.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).enc == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));

    const Elem scale = f.inv(a(row, col));
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) = f.mul(a(row, c), scale);

    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      const Elem factor = a(r, col);
      if (factor.enc == 0) continue;
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) = f.sub(a(r, c), f.mul(factor, a(row, c)));
    }
    res.pivots.push_back(col);
    ++row;
  }
  return res;
}

std::size_t rank(const MatrixFq2& m) { return rref(m).rank(); }

std::vector<std::vector<Elem>> nullspace_basis(const MatrixFq2& m) {
  const Field& f = m.field();
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;

  std::vector<std::vector<Elem>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(m.cols(), Elem{0});
    v[free] = f.one();
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = f.neg(r.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

Count count_full_support_kernel_enumerate(const MatrixFq2& m) {
  const Field& f = m.field();
  const auto basis = nullspace_basis(m);
  const std::size_t k = basis.size();
  if (k > 3) throw Error(Errc::InvalidArgument, "enumeration path needs nullity <= 3");
  if (k == 0) return m.cols() == 0 ? 1 : 0;

  const std::uint32_t q2 = f.q2();
  std::vector<std::uint32_t> coef(k, 0);
  std::vector<Elem> v(m.cols());
  Count total = 0;
  for (;;) {
    bool full = true;
    for (std::size_t c = 0; c < m.cols() && full; ++c) {
      Elem s{0};
      for (std::size_t i = 0; i < k; ++i) s = f.add(s, f.mul(Elem{coef[i]}, basis[i][c]));
      full = s.enc != 0;
    }
    if (full) ++total;

    std::size_t i = 0;
    while (i < k && ++coef[i] == q2) coef[i++] = 0;
    if (i == k) break;
  }
  return total;
}

Count count_full_support_kernel_inclusion_exclusion(const MatrixFq2& m) {
  const std::size_t n = m.cols();
  if (n > 30) throw Error(Errc::InvalidArgument, "too many columns for inclusion-exclusion");
  const Count q2 = m.field().q2();
  Count total = 0;
  std::vector<std::size_t> keep;
  for (std::uint64_t zero_mask = 0; zero_mask < (std::uint64_t{1} << n); ++zero_mask) {
    keep.clear();
    for (std::size_t c = 0; c < n; ++c)
      if (!(zero_mask >> c & 1)) keep.push_back(c);
    const std::size_t r = keep.empty() ? 0 : rank(m.select_columns(keep));
    const Count term = ipow(q2, static_cast<unsigned>(keep.size() - r));
    total = (__builtin_popcountll(zero_mask) % 2 == 0) ? checked_add(total, term) : checked_sub(total, term);
  }
  return total;
}

Count count_full_support_kernel(const MatrixFq2& m) {
  if (m.cols() == 0) return 1;
  const std::size_t nullity = m.cols() - rank(m);
  if (nullity == 0) return 0;
  if (nullity <= 3) return count_full_support_kernel_enumerate(m);
  return count_full_support_kernel_inclusion_exclusion(m);
}

}  // namespace hermit
