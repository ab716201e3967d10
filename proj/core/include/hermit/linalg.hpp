#pragma once

// Dense exact linear algebra over GF(q^2).

#include <cstddef>
#include <vector>

#include "hermit/count.hpp"
#include "hermit/gf2q.hpp"

namespace hermit {

class MatrixFq2 {
 public:
  /// rows x cols zero matrix. The field must outlive the matrix.
  MatrixFq2(const Field& f, std::size_t rows, std::size_t cols);

  const Field& field() const noexcept { return *field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

  /// Submatrix on the given columns, in the given order.
  MatrixFq2 select_columns(const std::vector<std::size_t>& cols) const;

  bool operator==(const MatrixFq2& other) const noexcept {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  const Field* field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

struct RrefResult {
  MatrixFq2 reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row

  std::size_t rank() const noexcept { return pivots.size(); }
};

RrefResult rref(const MatrixFq2& m);
std::size_t rank(const MatrixFq2& m);

/// Basis of {v : M v = 0}; one vector per free column, with a 1 there.
std::vector<std::vector<Elem>> nullspace_basis(const MatrixFq2& m);

/// Number of kernel vectors with no zero coordinate.
Count count_full_support_kernel(const MatrixFq2& m);

/// Walks every combination of a kernel basis; requires nullity <= 3.
Count count_full_support_kernel_enumerate(const MatrixFq2& m);

/// Inclusion-exclusion over the set Z of coordinates forced to zero:
/// sum_Z (-1)^|Z| (q^2)^(cols - |Z| - rank(M restricted to the other columns)).
Count count_full_support_kernel_inclusion_exclusion(const MatrixFq2& m);

}  // namespace hermit
