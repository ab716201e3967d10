#pragma once

// Closed-form small-weight codeword counts for first-phase Hermitian codes.
// Every division is checked to be exact.

#include <map>

#include "hermit/count.hpp"

namespace hermit {

/// q^2 (q^2-1) C(q, d) for edge codes, 2 <= d <= q.
Count a_min_edge(Count q, int d);

/// q^2 (q^2-1) C(q, d-1) (q^3-d+1) / d for corner codes, 2 <= d <= q.
Count a_min_corner(Count q, int d);

/// Dispatches on j (0 = corner).
Count a_min(Count q, int d, int j);

enum class CodeKind { Corner, Edge };

/// Weight d+1 counts by support geometry, 3 <= d <= q.
struct SecondWeightConfigs {
  /// Supports on one horizontal line. For edge codes this is
  /// (q^2-1)(q^2-q) C(q+1, d+1); horizontal_short keeps the variant without
  /// the (q^2-1) factor. For corner codes both fields agree.
  Count horizontal = 0;
  Count horizontal_short = 0;
  /// Supports on one vertical line.
  Count vertical = 0;
  /// Supports on one non-vertical line, horizontal ones included.
  Count non_vertical = 0;
};

/// q^4 - (d+1) q^2 + d.
Count generic_rank_deficit_count(Count q, int d);

SecondWeightConfigs second_weight_configs(Count q, int d, CodeKind kind);

/// Weight 4 of H^0_3, q >= 3.
Count a4_h03(Count q);
/// Weight 4 of H^1_3 from the N_k table (keys 4..2q), q >= 3.
Count a4_h13(Count q, const std::map<int, Count>& n_k);
/// Weight 4 of H^2_3, q >= 3.
Count a4_h23(Count q);
/// Weight 5 of H^0_4, q >= 4.
Count a5_h04(Count q);
/// Weight 5 of H^j_4 for every 1 <= j <= 3, q >= 4.
Count a5_edge4(Count q);

}  // namespace hermit
