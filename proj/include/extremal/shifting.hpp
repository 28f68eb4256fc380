#pragma once

#include "extremal/family.hpp"

namespace extremal {

/// The (i, j)-shift: each edge F with j in F, i not in F is replaced by
/// F - j + i unless that set is already in the family. Requires
/// 1 <= i < j <= n; throws ArgumentError otherwise.
Family shift_ij(const Family& f, int i, int j);

/// Repeats full passes of shift_ij over (i, j) in lexicographic order
/// (i ascending, then j ascending) until a pass changes nothing. The sweep
/// order is fixed so the output is deterministic.
Family shift_closure(const Family& f);

/// True iff G precedes F and F in the family imply G in the family. Checked
/// through single-vertex replacements, which generate the order.
bool is_shifted(const Family& f);

/// Componentwise order on increasingly sorted sets of equal size:
/// (a_1..a_k) precedes (b_1..b_k) iff a_l <= b_l for all l.
/// Throws ArgumentError on size mismatch.
bool precedes(Edge a, Edge b);

}  // namespace extremal
