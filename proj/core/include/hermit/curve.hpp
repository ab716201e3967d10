#pragma once

// The Hermitian curve x^(q+1) = y^q + y over GF(q^2): its affine points,
// intersections with lines and parabolas, and the q^3-element automorphism
// subgroup (x, y) -> (x + g, y + g^q x + d) with (g, d) on the curve.

#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

#include "hermit/gf2q.hpp"

namespace hermit {

class CurvePoint {
 public:
  /// Throws NotOnCurve unless x^(q+1) = y^q + y.
  CurvePoint(const Field& f, Elem x, Elem y);

  Elem x() const noexcept { return x_; }
  Elem y() const noexcept { return y_; }

  auto operator<=>(const CurvePoint&) const = default;

 private:
  friend class HermitianCurve;
  friend class Automorphism;
  CurvePoint(Elem x, Elem y) : x_(x), y_(y) {}

  Elem x_;
  Elem y_;
};

struct VerticalLine {
  Elem t;  // x = t
};

struct AffineLine {
  Elem a;  // y = a x + b
  Elem b;
};

using Line = std::variant<VerticalLine, AffineLine>;

/// y = a x^2 + b x + c with a != 0.
class Parabola {
 public:
  /// Throws NotAParabola when a = 0.
  Parabola(Elem a, Elem b, Elem c);

  Elem a() const noexcept { return a_; }
  Elem b() const noexcept { return b_; }
  Elem c() const noexcept { return c_; }

  auto operator<=>(const Parabola&) const = default;

 private:
  Elem a_, b_, c_;
};

class Automorphism {
 public:
  /// Throws InvalidAutomorphism unless gamma^(q+1) = delta^q + delta.
  Automorphism(const Field& f, Elem gamma, Elem delta);

  Elem gamma() const noexcept { return gamma_; }
  Elem delta() const noexcept { return delta_; }

  /// (x, y) -> (x + gamma, y + gamma^q x + delta).
  CurvePoint apply(const Field& f, const CurvePoint& p) const;

 private:
  Elem gamma_;
  Elem delta_;
};

struct Intersection {
  int count = 0;
  std::vector<CurvePoint> points;  // ascending x, then y
};

class HermitianCurve {
 public:
  /// The field must outlive the curve.
  explicit HermitianCurve(const Field& f);
  HermitianCurve(Field&&) = delete;

  const Field& field() const noexcept { return *field_; }

  /// All q^3 affine points in ascending (x, y) encoding order. This order
  /// fixes the parity-check column order.
  const std::vector<CurvePoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

  bool contains(Elem x, Elem y) const noexcept;
  /// Column index of a point in points().
  std::size_t index_of(const CurvePoint& p) const noexcept;
  /// The q points with the given x, ascending y.
  std::vector<CurvePoint> fiber(Elem x) const;

  Intersection intersect(const Line& line) const;
  /// Brute evaluation over all x. Throws InadmissibleCount when the count
  /// falls outside the admissible set for this characteristic.
  Intersection intersect(const Parabola& parabola) const;

 private:
  const Field* field_;
  std::vector<CurvePoint> points_;
  // y values grouped by Tr(y); rank_ is the position of y inside its group
  std::vector<std::vector<Elem>> by_trace_;
  std::vector<std::uint32_t> rank_;
};

std::vector<CurvePoint> enumerate_points(const Field& f);

/// Closed-form line count: q for vertical lines; 1 for tangents
/// (a^(q+1) + b^q + b = 0) and q+1 otherwise.
int predicted_line_count(const Field& f, const Line& line);

/// F_a(x) = N(x) - Tr(a x^2), an element of GF(q).
Elem f_a(const Field& f, Elem a, Elem x);

/// Intersection numbers a parabola can attain: {0,1,q-1,q,q+1,2q-1,2q}
/// for odd q and {1,q-1,q+1,2q-1} for even q (ascending, deduplicated).
std::vector<int> admissible_parabola_counts(const Field& f);

enum class ParabolaBranch {
  EvenTraceZero,     // Tr(c') = 0 after reducing b
  EvenTraceNonzero,
  OddDeltaZeroShifted,  // Delta = 0 and 2ab^q + b != 0
  OddDeltaZeroTraceZero,
  OddDeltaZeroTraceNonzero,
  OddDeltaSquare,    // Delta a nonzero square in GF(q)
  OddDeltaNonSquare,
};

std::string_view branch_name(ParabolaBranch b) noexcept;

struct ParabolaPrediction {
  int count;
  ParabolaBranch branch;
};

/// Intersection number from invariants only: the parabola is moved to a
/// b = 0 representative by an automorphism where possible, then decided by
/// Delta = 1 - 4N(a) (odd q) or Tr_{GF(q)/GF(2)}(a^(q+1)) (even q) and the
/// trace of the representative's constant term.
ParabolaPrediction classify_parabola(const Field& f, const Parabola& parabola);

/// Pullback of the parabola along the automorphism:
/// y = a x^2 + (2a g - g^q + b) x + a g^2 + b g - d + c.
/// A curve point p lies on the result iff aut(p) lies on the input.
Parabola apply_automorphism(const Field& f, const Automorphism& aut, const Parabola& parabola);

/// Image of x -> 2 a x - x^q, sorted by encoding. Odd characteristic only
/// (throws EvenCharacteristic).
std::vector<Elem> image_of_linear_map(const Field& f, Elem a);

}  // namespace hermit
