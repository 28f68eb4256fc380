#include <doctest.h>

#include "../brute.hpp"
#include "extremal/constructions.hpp"
#include "extremal/errors.hpp"
#include "extremal/invariants.hpp"
#include "extremal/operators.hpp"
#include "extremal/sampling.hpp"

using namespace extremal;

namespace {

brute::Sets lists(const Family& f) { return f.to_lists(); }

void check_against_brute(const Family& f) {
  const auto ref = lists(f);
  const MatchingResult m = matching_number(f);
  const CoverResult c = covering_number(f);
  const CliqueResult w = clique_number(f);
  CHECK(m.nu == brute::nu(ref));
  CHECK(c.tau == brute::tau(ref, f.n()));
  CHECK(w.omega == brute::omega(ref, f.n(), f.k()));

  // Witnesses certify the values.
  CHECK(static_cast<int>(m.witness.size()) == m.nu);
  for (std::size_t i = 0; i < m.witness.size(); ++i) {
    CHECK(f.contains(m.witness[i]));
    for (std::size_t j = i + 1; j < m.witness.size(); ++j) CHECK_FALSE(m.witness[i].meets(m.witness[j]));
  }
  CHECK(c.witness.size() == c.tau);
  for (Edge e : f) CHECK(e.meets(c.witness));
  CHECK(w.witness.size() == std::min(w.omega, f.n()));
  if (!f.empty())
    for_each_subset_of_size(w.witness, f.k(), [&](Edge e) { CHECK(f.contains(e)); });
}

}  // namespace

TEST_CASE("nu, tau and omega agree with brute force on random families") {
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 7));
    const int k = 1 + static_cast<int>(uniform_below(rng, std::min(3, n)));
    const Family f = random_family(rng, n, k, uniform_below(rng, binomial_u64(n, k) + 1));
    CAPTURE(f.to_string());
    check_against_brute(f);
    if (!f.empty()) {
      const int nu = matching_number(f).nu, tau = covering_number(f).tau;
      CHECK(nu <= tau);
      CHECK(tau <= k * nu);
    }
  }
}

TEST_CASE("invariant conventions for degenerate families") {
  const Family empty(6, 3);
  CHECK(matching_number(empty).nu == 0);
  CHECK(covering_number(empty).tau == 0);
  CHECK(clique_number(empty).omega == 2);
  CHECK(clique_number(Family(6, 0)).omega == 0);
  const Family point = Family::from_lists(4, 0, {{}});
  CHECK(matching_number(point).nu == 1);
  CHECK(clique_number(point).omega == 4);
  CHECK_THROWS_AS(covering_number(point), ArgumentError);
}

TEST_CASE("invariants of named families") {
  const InvariantReport e = invariants(hitting_family(6, 2, 2));
  CHECK(e.nu == 2);
  CHECK(e.tau == 2);
  CHECK(e.omega == 3);
  const InvariantReport b = invariants(cover_gap_family(8, 2, 2));
  CHECK(b.nu == 2);
  CHECK(b.tau == 3);
  CHECK(b.omega == 4);
  CHECK(matching_number(Family::complete(11, 3)).nu == 3);
  CHECK(clique_number(Family::complete(11, 3)).omega == 11);
}

TEST_CASE("has_disjoint_edges respects the avoided set") {
  const Family f = Family::from_lists(6, 2, {{1, 2}, {3, 4}, {5, 6}, {1, 3}});
  CHECK(has_disjoint_edges(f.edges(), 3));
  CHECK_FALSE(has_disjoint_edges(f.edges(), 4));
  CHECK_FALSE(has_disjoint_edges(f.edges(), 3, VertexSet::of({6})));
  std::vector<Edge> found;
  CHECK(has_disjoint_edges(f.edges(), 2, VertexSet::of({1}), &found));
  CHECK(found.size() == 2);
  for (Edge e : found) CHECK_FALSE(e.contains(1));
  CHECK(has_disjoint_edges(f.edges(), 0));
}

TEST_CASE("intersection predicates") {
  const Family star = Family::from_lists(5, 2, {{1, 2}, {1, 3}, {1, 4}});
  const Family tri = Family::from_lists(5, 2, {{1, 2}, {1, 3}, {2, 3}});
  const Family far = Family::from_lists(5, 2, {{4, 5}});
  CHECK(is_intersecting(star));
  CHECK(is_intersecting(tri));
  CHECK_FALSE(is_intersecting(Family::from_lists(5, 2, {{1, 2}, {3, 4}})));
  CHECK(is_t_intersecting(Family::from_lists(5, 3, {{1, 2, 3}, {1, 2, 4}}), 2));
  CHECK_FALSE(is_t_intersecting(Family::from_lists(5, 3, {{1, 2, 3}, {1, 4, 5}}), 2));
  CHECK(is_t_intersecting(Family::from_lists(5, 3, {{1, 2, 3}}), 3));
  CHECK(are_cross_intersecting(star, Family::from_lists(5, 1, {{1}})));
  CHECK_FALSE(are_cross_intersecting(tri, far));
  const IntersectionReport r = intersection_predicates(star, far, 1);
  CHECK(r.intersecting);
  CHECK(r.t_intersecting);
  CHECK_FALSE(r.cross_intersecting);
  CHECK_THROWS_AS(intersection_predicates(star, Family(6, 2), 1), ArgumentError);
}
