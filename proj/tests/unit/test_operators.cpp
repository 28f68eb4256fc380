#include <doctest.h>

#include "../brute.hpp"
#include "extremal/constructions.hpp"
#include "extremal/errors.hpp"
#include "extremal/operators.hpp"
#include "extremal/sampling.hpp"

using namespace extremal;

TEST_CASE("binomial_u64") {
  CHECK(binomial_u64(10, 3) == 120);
  CHECK(binomial_u64(64, 32) == 1832624140942590534ULL);
  CHECK(binomial_u64(3, 5) == 0);
  CHECK(binomial_u64(3, -1) == 0);
  CHECK(binomial_u64(67, 33) == 14226520737620288370ULL);
  CHECK_THROWS_AS(binomial_u64(68, 34), CapacityError);
}

TEST_CASE("shadow matches the reference and composes") {
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    const Family f = random_family(rng, 7, 3, uniform_below(rng, 36));
    CHECK(brute::sorted(shadow(f, 1).to_lists()) == brute::shadow(brute::sorted(f.to_lists())));
    CHECK(shadow(shadow(f, 1), 1) == shadow(f, 2));
    CHECK(shadow(f, 0) == f);
  }
  CHECK_THROWS_AS(shadow(Family::complete(5, 2), 2), ArgumentError);
  CHECK(shadow(Family(5, 2), 1).empty());
}

TEST_CASE("lex and colex segments") {
  // Families hold edges in colex order; the lex segment is {12, 13, 14, 15, 23}.
  CHECK(lex_family(5, 2, 5).to_lists() == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}});
  CHECK(colex_family(5, 2, 4).to_lists() == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}, {1, 4}});
  CHECK(lex_family(5, 2, 0).empty());
  CHECK(lex_family(5, 2, 10) == Family::complete(5, 2));
  CHECK_THROWS_AS(lex_family(5, 2, 11), ArgumentError);
  // A colex segment has the smallest shadow while a lex segment need not.
  CHECK(shadow(colex_family(4, 2, 3), 1).size() == 3);
  CHECK(shadow(lex_family(4, 2, 3), 1).size() == 4);
}

TEST_CASE("links and restrictions") {
  const Family e = hitting_family(6, 2, 2);
  CHECK(link(e, VertexSet::of({1})).to_lists() == std::vector<std::vector<int>>{{2}, {3}, {4}, {5}, {6}});
  CHECK(restrict_avoid(e, VertexSet::of({1})).to_lists() ==
        std::vector<std::vector<int>>{{2, 3}, {2, 4}, {2, 5}, {2, 6}});
  CHECK(link_within(Family::complete(5, 3), VertexSet::of({5}), VertexSet::interval(1, 4)).to_lists() ==
        Family::complete(4, 2).to_lists());
  const Family big = link(e, VertexSet::of({1, 2, 3}));
  CHECK(big.empty());
  CHECK(big.k() == 0);
}
