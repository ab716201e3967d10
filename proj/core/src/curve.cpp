#include "hermit/curve.hpp"

#include <algorithm>
#include <string>

#include "hermit/error.hpp"

namespace hermit {

namespace {

bool on_curve(const Field& f, Elem x, Elem y) { return f.norm(x) == f.trace(y); }

}  // namespace

CurvePoint::CurvePoint(const Field& f, Elem x, Elem y) : x_(x), y_(y) {
  if (!on_curve(f, x, y)) {
    throw Error(Errc::NotOnCurve, "(" + std::to_string(x.enc) + ", " + std::to_string(y.enc) + ")");
  }
}

Parabola::Parabola(Elem a, Elem b, Elem c) : a_(a), b_(b), c_(c) {
  if (a.enc == 0) throw Error(Errc::NotAParabola, "leading coefficient is zero");
}

Automorphism::Automorphism(const Field& f, Elem gamma, Elem delta) : gamma_(gamma), delta_(delta) {
  if (!on_curve(f, gamma, delta)) {
    throw Error(Errc::InvalidAutomorphism,
                "(" + std::to_string(gamma.enc) + ", " + std::to_string(delta.enc) + ") is not on the curve");
  }
}

CurvePoint Automorphism::apply(const Field& f, const CurvePoint& p) const {
  const Elem x = f.add(p.x(), gamma_);
  const Elem y = f.add(f.add(p.y(), f.mul(f.frobenius(gamma_), p.x())), delta_);
  return CurvePoint(x, y);
}

HermitianCurve::HermitianCurve(const Field& f) : field_(&f) {
  const std::uint32_t q2 = f.q2();
  by_trace_.resize(q2);
  rank_.resize(q2);
  for (std::uint32_t y = 0; y < q2; ++y) {
    auto& bucket = by_trace_[f.trace(Elem{y}).enc];
    rank_[y] = static_cast<std::uint32_t>(bucket.size());
    bucket.push_back(Elem{y});
  }
  points_.reserve(static_cast<std::size_t>(f.q()) * q2);
  for (std::uint32_t x = 0; x < q2; ++x) {
    for (Elem y : by_trace_[f.norm(Elem{x}).enc]) points_.push_back(CurvePoint(Elem{x}, y));
  }
}

bool HermitianCurve::contains(Elem x, Elem y) const noexcept { return on_curve(*field_, x, y); }

std::size_t HermitianCurve::index_of(const CurvePoint& p) const noexcept {
  return static_cast<std::size_t>(p.x().enc) * field_->q() + rank_[p.y().enc];
}

std::vector<CurvePoint> HermitianCurve::fiber(Elem x) const {
  const auto first = points_.begin() + static_cast<std::ptrdiff_t>(x.enc) * field_->q();
  return {first, first + field_->q()};
}

Intersection HermitianCurve::intersect(const Line& line) const {
  const Field& f = *field_;
  Intersection out;
  if (const auto* v = std::get_if<VerticalLine>(&line)) {
    out.points = fiber(v->t);
  } else {
    const auto& l = std::get<AffineLine>(line);
    for (std::uint32_t xe = 0; xe < f.q2(); ++xe) {
      const Elem x{xe};
      const Elem y = f.add(f.mul(l.a, x), l.b);
      if (on_curve(f, x, y)) out.points.push_back(CurvePoint(x, y));
    }
  }
  out.count = static_cast<int>(out.points.size());
  return out;
}

Intersection HermitianCurve::intersect(const Parabola& parabola) const {
  const Field& f = *field_;
  Intersection out;
  for (std::uint32_t xe = 0; xe < f.q2(); ++xe) {
    const Elem x{xe};
    const Elem y = f.add(f.mul(f.add(f.mul(parabola.a(), x), parabola.b()), x), parabola.c());
    if (on_curve(f, x, y)) out.points.push_back(CurvePoint(x, y));
  }
  out.count = static_cast<int>(out.points.size());
  const auto admissible = admissible_parabola_counts(f);
  if (!std::binary_search(admissible.begin(), admissible.end(), out.count)) {
    throw Error(Errc::InadmissibleCount, "parabola meets the curve in " + std::to_string(out.count) + " points");
  }
  return out;
}

std::vector<CurvePoint> enumerate_points(const Field& f) { return HermitianCurve(f).points(); }

int predicted_line_count(const Field& f, const Line& line) {
  const int q = static_cast<int>(f.q());
  if (std::holds_alternative<VerticalLine>(line)) return q;
  const auto& l = std::get<AffineLine>(line);
  const Elem c = f.add(f.norm(l.a), f.trace(l.b));
  return c.enc == 0 ? 1 : q + 1;
}

Elem f_a(const Field& f, Elem a, Elem x) { return f.sub(f.norm(x), f.trace(f.mul(a, f.mul(x, x)))); }

std::vector<int> admissible_parabola_counts(const Field& f) {
  const int q = static_cast<int>(f.q());
  std::vector<int> out = f.odd() ? std::vector<int>{0, 1, q - 1, q, q + 1, 2 * q - 1, 2 * q}
                                 : std::vector<int>{1, q - 1, q + 1, 2 * q - 1};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string_view branch_name(ParabolaBranch b) noexcept {
  switch (b) {
    case ParabolaBranch::EvenTraceZero: return "even/trace-zero";
    case ParabolaBranch::EvenTraceNonzero: return "even/trace-nonzero";
    case ParabolaBranch::OddDeltaZeroShifted: return "odd/delta-zero/shifted";
    case ParabolaBranch::OddDeltaZeroTraceZero: return "odd/delta-zero/trace-zero";
    case ParabolaBranch::OddDeltaZeroTraceNonzero: return "odd/delta-zero/trace-nonzero";
    case ParabolaBranch::OddDeltaSquare: return "odd/delta-square";
    case ParabolaBranch::OddDeltaNonSquare: return "odd/delta-nonsquare";
  }
  return "unknown";
}

ParabolaPrediction classify_parabola(const Field& f, const Parabola& parabola) {
  const int q = static_cast<int>(f.q());
  const Elem a = parabola.a();
  const Elem b = parabola.b();
  const Elem c = parabola.c();

  // Trace of the constant term after pulling back along (g, d) with the
  // linear coefficient sent to zero: Tr(a g^2 + b g + c) - N(g).
  auto reduced_trace = [&](Elem g) {
    const Elem shifted = f.add(f.add(f.mul(a, f.mul(g, g)), f.mul(b, g)), c);
    return f.sub(f.trace(shifted), f.norm(g));
  };

  if (!f.odd()) {
    // 2a g - g^q + b = 0 is solved by g = b^q
    const Elem t = reduced_trace(f.frobenius(b));
    const bool two_roots = f.subfield_trace_to_prime(f.norm(a)).enc != 0;
    if (t.enc == 0) return {two_roots ? 2 * q - 1 : 1, ParabolaBranch::EvenTraceZero};
    return {two_roots ? q - 1 : q + 1, ParabolaBranch::EvenTraceNonzero};
  }

  const Elem two_a = f.mul(f.from_int(2), a);
  const Elem delta = f.sub(f.one(), f.mul(f.from_int(4), f.norm(a)));

  if (delta.enc == 0) {
    // b can be cleared iff b lies in the image of x -> 2ax - x^q, which is
    // the kernel of b -> 2a b^q + b.
    const Elem obstruction = f.add(f.mul(two_a, f.frobenius(b)), b);
    if (obstruction.enc != 0) return {q, ParabolaBranch::OddDeltaZeroShifted};
    const Elem t = f.sub(f.trace(c), f.mul(f.frobenius(a), f.mul(b, b)));
    if (t.enc == 0) return {q, ParabolaBranch::OddDeltaZeroTraceZero};
    // (x^q - 2ax)^2 = -4 a t has 2q roots when sqrt(-4at) is in the image, else none
    const Elem rhs = f.neg(f.mul(f.mul(f.from_int(4), a), t));
    if (!f.is_square(rhs)) return {0, ParabolaBranch::OddDeltaZeroTraceNonzero};
    const Elem s = f.sqrt(rhs);
    const bool in_image = f.add(f.mul(two_a, f.frobenius(s)), s).enc == 0;
    return {in_image ? 2 * q : 0, ParabolaBranch::OddDeltaZeroTraceNonzero};
  }

  // x -> 2ax - x^q is bijective; its preimage of -b is (b^q + 2 a^q b) / Delta
  const Elem g = f.div(f.add(f.frobenius(b), f.mul(f.frobenius(two_a), b)), delta);
  const Elem t = reduced_trace(g);
  if (f.is_subfield_square(delta)) {
    return {t.enc == 0 ? 1 : q + 1, ParabolaBranch::OddDeltaSquare};
  }
  return {t.enc == 0 ? 2 * q - 1 : q - 1, ParabolaBranch::OddDeltaNonSquare};
}

Parabola apply_automorphism(const Field& f, const Automorphism& aut, const Parabola& parabola) {
  const Elem a = parabola.a();
  const Elem b = parabola.b();
  const Elem g = aut.gamma();
  const Elem lin = f.add(f.sub(f.mul(f.mul(f.from_int(2), a), g), f.frobenius(g)), b);
  const Elem cst = f.add(f.sub(f.add(f.mul(a, f.mul(g, g)), f.mul(b, g)), aut.delta()), parabola.c());
  return Parabola(a, lin, cst);
}

std::vector<Elem> image_of_linear_map(const Field& f, Elem a) {
  if (!f.odd()) throw Error(Errc::EvenCharacteristic, "image_of_linear_map needs odd characteristic");
  const Elem two_a = f.mul(f.from_int(2), a);
  std::vector<bool> hit(f.q2(), false);
  for (std::uint32_t xe = 0; xe < f.q2(); ++xe) {
    const Elem x{xe};
    hit[f.sub(f.mul(two_a, x), f.frobenius(x)).enc] = true;
  }
  std::vector<Elem> out;
  for (std::uint32_t v = 0; v < f.q2(); ++v)
    if (hit[v]) out.push_back(Elem{v});
  return out;
}

}  // namespace hermit
