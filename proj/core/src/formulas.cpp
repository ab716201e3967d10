#include "hermit/formulas.hpp"

#include <string>

#include "hermit/error.hpp"

namespace hermit {

namespace {

void require_first_phase(Count q, int d, int lo = 2) {
  if (d < lo || d > q) {
    throw Error(Errc::SpecOutOfRange, "need " + std::to_string(lo) + " <= d <= q, got d=" + std::to_string(d) +
                                          " q=" + to_string(q));
  }
}

void require_q(Count q, Count lo) {
  if (q < lo) throw Error(Errc::SpecOutOfRange, "formula needs q >= " + to_string(lo));
}

Count mul(std::initializer_list<Count> xs) {
  Count r = 1;
  for (Count x : xs) r = checked_mul(r, x);
  return r;
}

}  // namespace

Count a_min_edge(Count q, int d) {
  require_first_phase(q, d);
  return mul({q * q, q * q - 1, binom(static_cast<std::int64_t>(q), d)});
}

Count a_min_corner(Count q, int d) {
  require_first_phase(q, d);
  const Count num = mul({q * q, q * q - 1, binom(static_cast<std::int64_t>(q), d - 1), ipow(q, 3) - d + 1});
  return exact_div(num, d, "corner minimum weight");
}

Count a_min(Count q, int d, int j) { return j == 0 ? a_min_corner(q, d) : a_min_edge(q, d); }

Count generic_rank_deficit_count(Count q, int d) { return ipow(q, 4) - (d + 1) * q * q + d; }

SecondWeightConfigs second_weight_configs(Count q, int d, CodeKind kind) {
  require_first_phase(q, d, 3);
  const auto qi = static_cast<std::int64_t>(q);
  const Count deficit = generic_rank_deficit_count(q, d);
  const Count on_line = binom(qi + 1, d + 1);
  const Count secants = ipow(q, 4) - ipow(q, 3);

  SecondWeightConfigs c;
  c.vertical = mul({q * q, deficit, binom(qi, d + 1)});
  if (kind == CodeKind::Corner) {
    c.horizontal = mul({q * q - q, deficit, on_line});
    c.horizontal_short = c.horizontal;
    c.non_vertical = mul({secants, deficit, on_line});
  } else {
    c.horizontal = mul({q * q - 1, q * q - q, on_line});
    c.horizontal_short = mul({q * q - q, on_line});
    c.non_vertical = mul({secants, q * q - 1, on_line});
  }
  return c;
}

Count a4_h03(Count q) {
  require_q(q, 3);
  const auto qi = static_cast<std::int64_t>(q);
  const Count q3 = ipow(q, 3);
  const Count inner = checked_sub(mul({binom(static_cast<std::int64_t>(q3), 3), q + 1}),
                                  mul({q * q, binom(qi + 1, 3), 3 * q3 + 2 * q * q - 8}));
  return exact_div(mul({inner, q - 1, q3 - 3}), 4, "A4 of H^0_3");
}

Count a4_h13(Count q, const std::map<int, Count>& n_k) {
  require_q(q, 3);
  const auto qi = static_cast<std::int64_t>(q);
  for (int k = 4; k <= 2 * qi; ++k) {
    if (n_k.find(k) == n_k.end()) throw Error(Errc::InvalidArgument, "N_k table misses k=" + std::to_string(k));
  }
  Count lines = 0;
  for (const auto& [k, n] : n_k) {
    if (k < 4 || k > 2 * qi) continue;
    lines = checked_add(lines, checked_mul(n, binom(k, 4)));
  }
  const Count vertical = mul({q * q, binom(qi, 4), ipow(q, 4) - 4 * q * q + 3});
  const Count pairs = exact_div(mul({ipow(q, 4), ipow(q * q - 1, 2), ipow(q - 1, 2)}), 8, "A4 of H^1_3");
  return checked_add(checked_add(vertical, pairs), checked_mul(q * q - 1, lines));
}

Count a4_h23(Count q) {
  require_q(q, 3);
  const auto qi = static_cast<std::int64_t>(q);
  return mul({q * q, q - 1, binom(qi + 1, 4), 2 * ipow(q, 3) - 3 * q * q - 4 * q + 9});
}

Count a5_h04(Count q) {
  require_q(q, 4);
  const auto qi = static_cast<std::int64_t>(q);
  return exact_div(mul({q * q, binom(qi, 4), ipow(q, 3) - 4, q * q - 1, q * q - 4}), 5, "A5 of H^0_4");
}

Count a5_edge4(Count q) {
  require_q(q, 4);
  const auto qi = static_cast<std::int64_t>(q);
  return mul({q * q, q - 1, binom(qi + 1, 5), 2 * ipow(q, 3) - 4 * q * q - 5 * q + 16});
}

}  // namespace hermit
