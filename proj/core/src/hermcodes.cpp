#include "hermit/hermcodes.hpp"

#include <algorithm>

#include "hermit/error.hpp"

namespace hermit {

std::string describe(const CodeSpec& spec) {
  if (const auto* mf = std::get_if<MForm>(&spec)) return "m=" + std::to_string(mf->m);
  const auto& ce = std::get<CornerEdge>(spec);
  return "H^" + std::to_string(ce.j) + "_" + std::to_string(ce.d);
}

long max_m(std::uint32_t q) {
  const long qq = q;
  return qq * qq * qq + qq * qq - qq - 2;
}

long weighted_degree(std::uint32_t q, const Monomial& mono) {
  return static_cast<long>(q) * mono.r + static_cast<long>(q + 1) * mono.s;
}

namespace {

void sort_basis(std::uint32_t q, MonomialBasis& basis) {
  std::sort(basis.begin(), basis.end(), [q](const Monomial& u, const Monomial& v) {
    return weighted_degree(q, u) < weighted_degree(q, v);
  });
}

MonomialBasis m_basis(std::uint32_t q, long m) {
  MonomialBasis out;
  for (unsigned s = 0; s < q; ++s)
    for (unsigned r = 0; r < q * q; ++r)
      if (weighted_degree(q, {r, s}) <= m) out.push_back({r, s});
  sort_basis(q, out);
  return out;
}

void check_corner_edge(std::uint32_t q, const CornerEdge& ce) {
  if (ce.d < 2 || ce.d > static_cast<int>(q) || ce.j < 0 || ce.j > ce.d - 1) {
    throw Error(Errc::SpecOutOfRange, "need 2 <= d <= q and 0 <= j <= d-1, got d=" + std::to_string(ce.d) +
                                          " j=" + std::to_string(ce.j) + " for q=" + std::to_string(q));
  }
}

MonomialBasis corner_edge_basis(std::uint32_t q, const CornerEdge& ce) {
  check_corner_edge(q, ce);
  MonomialBasis out;
  for (int h = 0; h <= ce.d - 2; ++h)
    for (int i = 0; i <= ce.d - 2 - h; ++i) out.push_back({static_cast<unsigned>(i), static_cast<unsigned>(h)});
  for (int i = 1; i <= ce.j; ++i) out.push_back({static_cast<unsigned>(ce.d - i), static_cast<unsigned>(i - 1)});
  sort_basis(q, out);
  return out;
}

long table_first_phase_m(std::uint32_t q, const CornerEdge& ce) {
  const long qq = q;
  if (ce.j == 0) return (ce.d - 2) * (qq + 1);
  return (ce.d - 1) * qq + ce.j - 1;
}

}  // namespace

MonomialBasis build_basis(const Field& f, const CodeSpec& spec) {
  if (const auto* mf = std::get_if<MForm>(&spec)) {
    if (mf->m < 0 || mf->m > max_m(f.q())) {
      throw Error(Errc::SpecOutOfRange, "m=" + std::to_string(mf->m) + " outside [0, " + std::to_string(max_m(f.q())) + "]");
    }
    return m_basis(f.q(), mf->m);
  }
  return corner_edge_basis(f.q(), std::get<CornerEdge>(spec));
}

namespace {

bool is_first_phase(const Field& f, const CodeSpec& spec) {
  if (std::holds_alternative<CornerEdge>(spec)) return true;
  const long m = std::get<MForm>(spec).m;
  return m <= static_cast<long>(f.q2()) - 2;
}

}  // namespace

MatrixFq2 build_parity_check(const HermitianCurve& curve, const CodeSpec& spec) {
  const Field& f = curve.field();
  const MonomialBasis basis = build_basis(f, spec);
  const auto& pts = curve.points();
  MatrixFq2 h(f, basis.size(), pts.size());
  for (std::size_t c = 0; c < pts.size(); ++c) {
    for (std::size_t r = 0; r < basis.size(); ++r) {
      h(r, c) = f.mul(f.pow(pts[c].x(), basis[r].r), f.pow(pts[c].y(), basis[r].s));
    }
  }
  if (is_first_phase(f, spec) && rank(h) != basis.size()) {
    throw Error(Errc::InvalidArgument, "parity-check rows of " + describe(spec) + " are dependent");
  }
  return h;
}

PhaseParams phase_params(const Field& f, long m) {
  const long q = f.q();
  const long n = q * q * q;
  if (m < 0 || m > max_m(f.q())) {
    throw Error(Errc::MOutOfRange, "m=" + std::to_string(m) + " outside [0, " + std::to_string(max_m(f.q())) + "]");
  }
  PhaseParams p;
  p.m = m;
  p.k = n - static_cast<long>(m_basis(f.q(), m).size());
  const long g = q * (q - 1) / 2;

  if (m <= q * q - 2) {
    p.phase = 1;
    const long a = m / q;
    // b > a admits nothing beyond b = a
    const long b = std::min(m % q, a);
    p.a = static_cast<int>(a);
    p.b = static_cast<int>(b);
    p.d = a > b ? a + 1 : a + 2;
    p.k_table = n - a * (a + 1) / 2 - (b + 1);
  } else if (m <= 2 * q * q - 2 * q - 2) {
    p.phase = 2;
    const long t = 2 * q * q - q - 1 - m;
    const long a = t / q;
    const long b = t % q;
    p.a = static_cast<int>(a);
    p.b = static_cast<int>(b);
    p.d = a < b ? (q - a) * q - b : (q - a) * q;
    p.k_table = n - m + g - 1;
  } else if (m <= n - 1) {
    p.phase = 3;
    p.d = m - q * q + q + 1;
    p.k_table = n - m + g - 1;
  } else {
    p.phase = 4;
    const long a = (m - n) / q;
    const long b = (m - n) % q;
    p.a = static_cast<int>(a);
    p.b = static_cast<int>(b);
    p.d = a < b ? n + a * q + b - 2 * g : n + a * q + a + 1 - 2 * g;
    p.k_table = g - a * q - b;
    p.k_table_is_bound = true;
  }
  return p;
}

long spec_to_m(const Field& f, const CornerEdge& spec) {
  const MonomialBasis target = corner_edge_basis(f.q(), spec);
  const long m = table_first_phase_m(f.q(), spec);
  if (m_basis(f.q(), m) != target || (m > 0 && m_basis(f.q(), m - 1) == target)) {
    throw Error(Errc::NoMatchingM, "no m reproduces the basis of " + describe(spec));
  }
  return m;
}

CornerEdge first_phase_spec(const Field& f, long m) {
  const PhaseParams p = phase_params(f, m);
  if (p.phase != 1) throw Error(Errc::MOutOfRange, "m=" + std::to_string(m) + " is not a first-phase value");
  const int a = *p.a;
  const int b = *p.b;
  if (a == b) return {a + 2, 0};
  return {a + 1, b + 1};
}

HermitianCode make_code(const HermitianCurve& curve, const CodeSpec& spec) {
  const Field& f = curve.field();
  long m = 0;
  if (const auto* mf = std::get_if<MForm>(&spec)) {
    m = mf->m;
  } else {
    m = spec_to_m(f, std::get<CornerEdge>(spec));
  }
  MatrixFq2 h = build_parity_check(curve, spec);
  return {spec, m, build_basis(f, spec), std::move(h), phase_params(f, m)};
}

}  // namespace hermit
