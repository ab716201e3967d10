#pragma once

// Hermitian codes C(m, q): duals of the evaluation codes spanned by the
// monomials x^r y^s with q r + (q+1) s <= m on the affine curve points.

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hermit/curve.hpp"
#include "hermit/linalg.hpp"

namespace hermit {

struct Monomial {
  unsigned r = 0;  // power of x
  unsigned s = 0;  // power of y

  auto operator<=>(const Monomial&) const = default;
};

/// Ascending weighted degree q r + (q+1) s. With s <= q-1 no two monomials
/// share a weighted degree, so the order is total.
using MonomialBasis = std::vector<Monomial>;

struct MForm {
  long m = 0;
  bool operator==(const MForm&) const = default;
};

/// Corner code (j = 0) or edge code (1 <= j <= d-1) with designed distance d.
struct CornerEdge {
  int d = 2;
  int j = 0;
  bool operator==(const CornerEdge&) const = default;
};

using CodeSpec = std::variant<MForm, CornerEdge>;

std::string describe(const CodeSpec& spec);

/// q^3 + q^2 - q - 2.
long max_m(std::uint32_t q);

/// q r + (q+1) s.
long weighted_degree(std::uint32_t q, const Monomial& mono);

/// Throws SpecOutOfRange.
MonomialBasis build_basis(const Field& f, const CodeSpec& spec);

/// Rows are the basis monomials evaluated at the curve points in the curve's
/// order. For first-phase specs the rank is checked to be maximal.
MatrixFq2 build_parity_check(const HermitianCurve& curve, const CodeSpec& spec);

struct PhaseParams {
  int phase = 0;
  long m = 0;
  std::optional<int> a;  // decomposition of m used by the phase row
  std::optional<int> b;
  long d = 0;
  long k = 0;                    // exact: q^3 - |basis|
  long k_table = 0;              // the table's value, or its lower bound in phase 4
  bool k_table_is_bound = false;
};

/// Throws MOutOfRange.
PhaseParams phase_params(const Field& f, long m);

/// Smallest m with the same basis as the corner/edge spec. Throws
/// SpecOutOfRange, or NoMatchingM if the bases disagree.
long spec_to_m(const Field& f, const CornerEdge& spec);

/// Corner/edge form of a first-phase m. Throws MOutOfRange outside phase 1.
CornerEdge first_phase_spec(const Field& f, long m);

struct HermitianCode {
  CodeSpec spec;
  long m = 0;
  MonomialBasis basis;
  MatrixFq2 parity_check;
  PhaseParams params;
};

HermitianCode make_code(const HermitianCurve& curve, const CodeSpec& spec);

}  // namespace hermit
