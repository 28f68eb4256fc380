#pragma once

#include <span>
#include <vector>

#include "extremal/family.hpp"

namespace extremal {

struct MatchingResult {
  int nu = 0;
  std::vector<Edge> witness;  // pairwise disjoint members, |witness| == nu
};

struct CoverResult {
  int tau = 0;
  VertexSet witness;  // meets every edge, |witness| == tau
};

struct CliqueResult {
  int omega = 0;
  VertexSet witness;  // every k-subset is an edge, |witness| == omega
};

/// nu, tau and omega together with their certificates.
struct InvariantReport {
  int nu = 0;
  int tau = 0;
  int omega = 0;
  std::vector<Edge> matching_witness;
  VertexSet cover_witness;
  VertexSet clique_witness;
};

/// Maximum number of pairwise disjoint edges. Exact branch and bound.
MatchingResult matching_number(const Family& f);

/// True iff `edges` holds `count` pairwise disjoint members that all avoid
/// `avoid`. When `found` is non-null it receives such a matching.
bool has_disjoint_edges(std::span<const Edge> edges, int count, VertexSet avoid = {},
                        std::vector<Edge>* found = nullptr);

/// Minimum vertex cover of the edges. tau of the empty family is 0.
CoverResult covering_number(const Family& f);

/// Largest q with some q-set whose k-subsets all lie in the family.
/// The empty family has omega = k - 1 (witness {1, ..., k-1} clipped to [n]).
CliqueResult clique_number(const Family& f);

InvariantReport invariants(const Family& f);

struct IntersectionReport {
  bool intersecting = true;
  bool t_intersecting = true;
  bool cross_intersecting = true;
};

/// Pairwise predicates: f intersecting, f t-intersecting (every two distinct
/// members share at least t vertices), and f, g cross-intersecting.
/// Throws ArgumentError when the ground sets differ or t < 0.
IntersectionReport intersection_predicates(const Family& f, const Family& g, int t);

bool is_intersecting(const Family& f);
bool is_t_intersecting(const Family& f, int t);
bool are_cross_intersecting(const Family& f, const Family& g);

}  // namespace extremal
