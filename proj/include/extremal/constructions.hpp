#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extremal/family.hpp"

namespace extremal {

/// The named families. E: sets meeting [s]; HM: Hilton-Milner; T3: triples
/// with two points in [3]; B: the nu < tau family; L: clique plus
/// intersecting star; A: clique plus s-matching family; CLIQUE: all k-sets of
/// [q]; LEX: lexicographic initial segment; CYC: cyclic intervals.
enum class ConstructionKind { E, HM, T3, B, L, A, Clique, Lex, Cyc };

std::string_view kind_name(ConstructionKind kind);
/// Accepts the names above (case-insensitive). Throws ArgumentError.
ConstructionKind parse_kind(std::string_view name);

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::E;
  std::map<std::string, int> params;  // n, k, s, q, m, l as applicable
  std::vector<int> sigma;             // CYC only; empty means the identity on [n]
};

/// Builds the literal family of the named definition. Out-of-range
/// parameters raise ArgumentError naming the violated constraint.
Family build(const ConstructionSpec& spec);

/// {E : E meets [s]}. Requires 1 <= s, 1 <= k <= n.
Family hitting_family(int n, int k, int s);

/// {H : 1 in H, H meets [2, k+1]} plus [2, k+1]. Requires k >= 1, n >= k+1.
Family hilton_milner_family(int n, int k);

/// {T : |T meet [3]| >= 2}, k = 3. Requires n >= 3.
Family triangle_family(int n);

/// {B meets [s-1]} plus [s+1, s+k] plus {B in [s,n] : s in B, B meets [s+1, s+k]}.
/// Requires s >= 1, k >= 1, n >= s+k.
Family cover_gap_family(int n, int k, int s);

/// All k-sets of [q] plus {L : 1 in L, |L meet [q]| > q-k}. Requires k < q < 2k, n >= q.
Family clique_intersecting_family(int n, int k, int q);

/// The shifted family with matching number s and clique number q built from
/// the index (p, r) of derive_pr:
///   all k-sets of [q]
///   plus {A in [p+1, n] : p+1 in A, |A meet [p+2, q]| >= r}
///   plus {A : A meets [p]}.
/// For q = s+k-1 this is hitting_family(n, k, s); for q = sk+k-1 it is the
/// clique on [q]. Requires k >= 2, s >= 1, s+k-1 <= q <= sk+k-1, n >= q.
/// The enumerated size is checked against size_A; a mismatch is a
/// std::logic_error.
Family clique_matching_family(int n, int q, int k, int s);

/// All k-sets of [q], over ground set [n]. Requires k <= q <= n.
Family clique_family(int n, int q, int k);

/// The m cyclic intervals {x_i, ..., x_{i+l-1}} (indices mod m) along
/// sigma = (x_0, ..., x_{m-1}), a permutation of [m]. Requires 1 <= l < m.
Family cyclic_intervals(const std::vector<int>& sigma, int l);

/// Identity permutation (1, ..., m).
std::vector<int> identity_permutation(int m);

}  // namespace extremal
