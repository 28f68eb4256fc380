#include <doctest.h>

#include <functional>

#include "../brute.hpp"
#include "extremal/constructions.hpp"
#include "extremal/errors.hpp"
#include "extremal/invariants.hpp"
#include "extremal/shifting.hpp"

using namespace extremal;

namespace {

int meet(const brute::Set& a, int lo, int hi) {
  int c = 0;
  for (int x : a) c += (lo <= x && x <= hi);
  return c;
}

brute::Sets filter(int n, int k, const std::function<bool(const brute::Set&)>& keep) {
  brute::Sets out;
  for (const auto& a : brute::subsets(n, k))
    if (keep(a)) out.push_back(a);
  return brute::sorted(out);
}

brute::Sets lists(const Family& f) { return brute::sorted(f.to_lists()); }

}  // namespace

TEST_CASE("E, HM, T3 and CLIQUE match their membership rules") {
  for (int n = 3; n <= 9; ++n)
    for (int k = 1; k <= std::min(n, 4); ++k) {
      for (int s = 1; s <= n - k + 1 && s <= 3; ++s)
        CHECK(lists(hitting_family(n, k, s)) == filter(n, k, [&](const auto& a) { return meet(a, 1, s) > 0; }));
      if (n >= k + 1)
        CHECK(lists(hilton_milner_family(n, k)) == filter(n, k, [&](const auto& a) {
                return (a.front() == 1 && meet(a, 2, k + 1) > 0) || meet(a, 2, k + 1) == k;
              }));
      for (int q = k; q <= n; ++q)
        CHECK(lists(clique_family(n, q, k)) == filter(n, k, [&](const auto& a) { return a.back() <= q; }));
    }
  for (int n = 3; n <= 9; ++n)
    CHECK(lists(triangle_family(n)) == filter(n, 3, [](const auto& a) { return meet(a, 1, 3) >= 2; }));
}

TEST_CASE("B and L match their membership rules") {
  for (int s = 1; s <= 3; ++s)
    for (int k = 1; k <= 3; ++k)
      for (int n = s + k; n <= 9; ++n)
        CHECK(lists(cover_gap_family(n, k, s)) == filter(n, k, [&](const auto& a) {
                return meet(a, 1, s - 1) > 0 || meet(a, s + 1, s + k) == k ||
                       (a.front() == s && meet(a, s + 1, s + k) > 0);
              }));
  for (int k = 2; k <= 4; ++k)
    for (int q = k + 1; q < 2 * k; ++q)
      for (int n = q; n <= 9; ++n)
        CHECK(lists(clique_intersecting_family(n, k, q)) == filter(n, k, [&](const auto& a) {
                return a.back() <= q || (a.front() == 1 && meet(a, 1, q) > q - k);
              }));
}

TEST_CASE("worked examples") {
  const Family e = hitting_family(6, 2, 2);
  CHECK(e.size() == 9);
  CHECK(matching_number(e).nu == 2);
  CHECK(clique_number(e).omega == 3);

  const Family hm = hilton_milner_family(7, 3);
  CHECK(hm.size() == 13);
  CHECK(is_intersecting(hm));

  const Family a = clique_matching_family(10, 7, 3, 2);
  CHECK(a.size() == 53);
  CHECK(matching_number(a).nu == 2);
  CHECK(clique_number(a).omega == 7);
  CHECK(is_shifted(a));

  CHECK(triangle_family(6).size() == 10);
}

TEST_CASE("A at the ends of its range") {
  for (int k = 2; k <= 4; ++k)
    for (int s = 1; s <= 3; ++s) {
      const int n = (s + 1) * k + 1;
      CHECK(clique_matching_family(n, s + k - 1, k, s) == hitting_family(n, k, s));
      CHECK(clique_matching_family(n, s * k + k - 1, k, s) == clique_family(n, s * k + k - 1, k));
    }
}

TEST_CASE("A has matching number s and clique number q") {
  for (int k = 2; k <= 3; ++k)
    for (int s = 1; s <= 3; ++s)
      for (int q = s + k - 1; q <= s * k + k - 1; ++q) {
        const int n = std::max(q, (s + 1) * k);
        const Family a = clique_matching_family(n, q, k, s);
        CAPTURE(n);
        CAPTURE(q);
        CHECK(brute::nu(a.to_lists()) == s);
        CHECK(brute::omega(a.to_lists(), n, k) == q);
        CHECK(brute::is_shifted(a.to_lists()));
      }
}

TEST_CASE("cyclic intervals") {
  CHECK(lists(cyclic_intervals(identity_permutation(4), 2)) ==
        brute::sorted({{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  CHECK(lists(cyclic_intervals({1, 3, 5, 2, 4}, 2)) ==
        brute::sorted({{1, 3}, {3, 5}, {2, 5}, {2, 4}, {1, 4}}));
  CHECK(cyclic_intervals(identity_permutation(7), 3).size() == 7);
  CHECK_THROWS_AS(cyclic_intervals({1, 2, 2}, 1), ArgumentError);
  CHECK_THROWS_AS(cyclic_intervals(identity_permutation(4), 4), ArgumentError);
}

TEST_CASE("build dispatches on the kind name") {
  CHECK(parse_kind("a") == ConstructionKind::A);
  CHECK(parse_kind("Clique") == ConstructionKind::Clique);
  CHECK(parse_kind("cyc") == ConstructionKind::Cyc);
  CHECK_THROWS_AS(parse_kind("Z"), ArgumentError);
  for (auto kind : {ConstructionKind::E, ConstructionKind::HM, ConstructionKind::T3, ConstructionKind::B,
                    ConstructionKind::L, ConstructionKind::A, ConstructionKind::Clique, ConstructionKind::Lex,
                    ConstructionKind::Cyc})
    CHECK(parse_kind(kind_name(kind)) == kind);

  ConstructionSpec spec;
  spec.kind = ConstructionKind::A;
  spec.params = {{"n", 10}, {"q", 7}, {"k", 3}, {"s", 2}};
  CHECK(build(spec).size() == 53);
  spec.params.erase("s");
  CHECK_THROWS_AS(build(spec), ArgumentError);

  spec.kind = ConstructionKind::Cyc;
  spec.params = {{"l", 2}};
  spec.sigma = {1, 3, 5, 2, 4};
  CHECK(build(spec).n() == 5);
  spec.params["n"] = 6;
  CHECK_THROWS_AS(build(spec), ArgumentError);

  spec = {};
  spec.kind = ConstructionKind::Lex;
  spec.params = {{"n", 6}, {"k", 2}, {"m", 4}};
  CHECK(lists(build(spec)) == brute::Sets{{1, 2}, {1, 3}, {1, 4}, {1, 5}});
}

TEST_CASE("out-of-range parameters are rejected") {
  CHECK_THROWS_AS(hitting_family(5, 2, 0), ArgumentError);
  CHECK_THROWS_AS(hilton_milner_family(3, 3), ArgumentError);
  CHECK_THROWS_AS(cover_gap_family(3, 2, 2), ArgumentError);
  CHECK_THROWS_AS(clique_intersecting_family(8, 3, 6), ArgumentError);
  CHECK_THROWS_AS(clique_matching_family(10, 3, 3, 2), ArgumentError);
  CHECK_THROWS_AS(clique_matching_family(10, 9, 3, 2), ArgumentError);
  CHECK_THROWS_AS(clique_matching_family(6, 7, 3, 2), ArgumentError);
  CHECK_THROWS_AS(clique_family(5, 6, 2), ArgumentError);
}
