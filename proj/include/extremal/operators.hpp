#pragma once

#include <cstdint>

#include "extremal/family.hpp"

namespace extremal {

/// Exact C(a, b) in 64 bits; 0 when b < 0 or b > a. Throws CapacityError on
/// overflow.
std::uint64_t binomial_u64(int a, int b);

/// All (k - steps)-subsets contained in some edge. shadow(f, 0) == f.
/// Throws ArgumentError unless 0 <= steps < k.
Family shadow(const Family& f, int steps);

/// The first m k-subsets of [n] in lexicographic order (A before B iff
/// min(A xor B) lies in A). Throws ArgumentError unless 0 <= m <= C(n, k).
Family lex_family(int n, int k, std::uint64_t m);

/// The first m k-subsets of [n] in colexicographic order (A before B iff
/// max(A xor B) lies in B); the shadow-minimizing segment.
Family colex_family(int n, int k, std::uint64_t m);

/// Edges containing v, with v removed. Uniformity drops to k - |v|; when
/// |v| > k the result is empty with uniformity 0.
Family link(const Family& f, VertexSet v);

/// Edges disjoint from v.
Family restrict_avoid(const Family& f, VertexSet v);

/// Edges F containing v with F - v inside q, reported as F - v.
Family link_within(const Family& f, VertexSet v, VertexSet q);

}  // namespace extremal
