#include <doctest.h>

#include "../brute.hpp"
#include "extremal/errors.hpp"
#include "extremal/formulas.hpp"

using namespace extremal;

namespace {

// |A(n,q,k,s)| by counting the three-case definition over vertex lists.
long long count_A(int n, int q, int k, int s) {
  long long count = 0;
  auto in = [](const brute::Set& a, int lo, int hi) {
    int c = 0;
    for (int x : a) c += (lo <= x && x <= hi);
    return c;
  };
  for (const brute::Set& a : brute::subsets(n, k)) {
    const bool clique = in(a, 1, q) == k;
    bool keep = false;
    if (q == s + k - 1) {
      keep = in(a, 1, s) > 0;
    } else if (q >= s * k + 1) {
      keep = clique || (a.front() == 1 && in(a, 2, q) >= q - s * k);
    } else {
      int p = 0;
      while (!((s - p) * k + p + 1 <= q && q <= (s - p) * k + p + k - 1)) ++p;
      const int r = q - p - (s - p) * k;
      keep = clique || in(a, 1, p) > 0 || (a.front() == p + 1 && in(a, p + 2, q) >= r);
    }
    count += keep;
  }
  return count;
}

long long ll(const BigInt& v) { return v.convert_to<long long>(); }

}  // namespace

TEST_CASE("binom follows the zero conventions") {
  CHECK(binom(10, 3) == 120);
  CHECK(binom(2, 3) == 0);
  CHECK(binom(5, -1) == 0);
  CHECK(binom(-1, 0) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK(to_string(binom(200, 100)) == "90548514656103281165404177077484163874504589675413336841320");
}

TEST_CASE("derive_pr tiles the clique range") {
  for (int k = 2; k <= 5; ++k)
    for (int s = 1; s <= 5; ++s) {
      for (int q = s + k - 1; q <= s * k + k - 1; ++q) {
        const auto [p, r] = derive_pr(q, k, s);
        CHECK((s - p) * k + p + 1 <= q);
        CHECK(q <= (s - p) * k + p + k - 1);
        CHECK(r == q - p - (s - p) * k);
        CHECK(0 <= p);
        CHECK(p <= s);
        CHECK(1 <= r);
        CHECK(r <= k - 1);
      }
      if (s * k >= s + k - 1) CHECK(derive_pr(s * k, k, s).p == 1);
      CHECK(derive_pr(s * k + 1, k, s).p == 0);
    }
  CHECK(derive_pr(3, 2, 2) == CliqueMatchingIndex{2, 1});
  CHECK_THROWS_AS(derive_pr(2, 2, 2), ArgumentError);
  CHECK_THROWS_AS(derive_pr(6, 2, 2), ArgumentError);
}

TEST_CASE("size_A matches counting the definition") {
  for (int k = 2; k <= 4; ++k)
    for (int s = 1; s <= 3; ++s)
      for (int q = s + k - 1; q <= s * k + k - 1; ++q)
        for (int n = std::max(q, (s + 1) * k); n <= 11; ++n) {
          CAPTURE(n);
          CAPTURE(q);
          CAPTURE(k);
          CAPTURE(s);
          CHECK(ll(size_A(n, q, k, s)) == count_A(n, q, k, s));
        }
}

TEST_CASE("frozen size_A values") {
  CHECK(size_A(10, 7, 3, 2) == 53);
  CHECK(size_A(10, 5, 3, 2) == 55);
  CHECK(size_A(6, 3, 2, 2) == 9);
  CHECK(size_A(6, 4, 2, 2) == 8);
  CHECK(size_A(9, 7, 3, 2) == 47);
  CHECK(size_A(11, 7, 3, 2) == 59);
  CHECK(size_A(144, 7, 3, 2) == 857);
}

TEST_CASE("named bounds") {
  CHECK(emc_bound(6, 2, 2) == 10);
  CHECK(emc_bound(10, 3, 2) == 64);
  CHECK(hm_bound(7, 3) == 13);
  CHECK(conjecture_rhs(6, 4, 2, 2) == 10);
  CHECK(conjecture_rhs(9, 7, 3, 2) == 56);
  CHECK(conjecture_rhs(11, 7, 3, 2) == 59);
  CHECK(recursion_rhs(10, 7, 3, 2, BigInt(4)) == 40);
  CHECK_THROWS_AS(conjecture_rhs(6, 2, 2, 2), ArgumentError);
  CHECK_THROWS_AS(conjecture_rhs(5, 4, 2, 2), ArgumentError);
  CHECK_THROWS_AS(hm_bound(6, 3), ArgumentError);
}

TEST_CASE("m_closed picks the most specific theorem") {
  auto check = [](int n, int q, int k, int s, long long value, Regime regime) {
    const BoundResult r = m_closed(n, q, k, s);
    CAPTURE(n);
    CAPTURE(q);
    CHECK(r.value == value);
    CHECK(r.regime == regime);
    CHECK(r.hypotheses_met);
  };
  check(9, 4, 2, 2, 11, Regime::SpecialCase1);
  check(9, 7, 3, 2, 56, Regime::SpecialCase2);
  check(16, 15, 2, 7, 105, Regime::SpecialCase1);
  check(64, 3, 2, 2, 125, Regime::SpecialCase1);
  check(12, 8, 3, 2, 56, Regime::FullClique);
  check(6, 6, 2, 2, 0, Regime::Zero);
  check(144, 7, 3, 2, 857, Regime::SpecialCase2);
  check(144, 5, 3, 2, 10574, Regime::Main2);
  check(144, 4, 3, 2, ll(binom(144, 3) - binom(142, 3)), Regime::Main2);

  const BoundResult open = m_closed(10, 6, 3, 2);
  CHECK(open.regime == Regime::Conjecture);
  CHECK_FALSE(open.hypotheses_met);
  CHECK(open.note == "Conjecture only");
  CHECK(open.value == 56);
  CHECK(m_closed(10, 3, 3, 2).value == conjecture_rhs(10, 4, 3, 2));
  CHECK_THROWS_AS(m_closed(8, 4, 3, 2), ArgumentError);
  CHECK_THROWS_AS(m_closed(10, 2, 3, 2), ArgumentError);
}

TEST_CASE("main-4 and the k = 2 theorem agree at their overlap") {
  const auto main4 = m_regime(Regime::Main4, 16, 15, 2, 7);
  const auto k2 = m_regime(Regime::SpecialCase1, 16, 15, 2, 7);
  REQUIRE(main4);
  REQUIRE(k2);
  CHECK(main4->value == 105);
  CHECK(k2->value == 105);
  CHECK_FALSE(m_regime(Regime::Main4, 17, 15, 2, 7));  // n too large
  CHECK_FALSE(m_regime(Regime::Main4, 16, 13, 2, 7));  // l = 3 breaks 3kl < s

  for (int k = 2; k <= 4; ++k)
    for (int s = 1; s <= 4; ++s)
      for (int n = (s + 1) * k; n <= 8 * k * k * s + k; n += 3)
        for (int q = s + k - 1; q <= (s + 1) * k; ++q) {
          const auto all = m_applicable_regimes(n, q, k, s);
          for (const auto& r : all) CHECK(r.value == all.front().value);
        }
}

TEST_CASE("m_star_closed") {
  const BoundResult big = m_star_closed(144, 7, 3, 2);
  CHECK(big.value == 857);
  CHECK(big.regime == Regime::Main1);
  CHECK(big.hypotheses_met);
  const BoundResult small = m_star_closed(6, 4, 2, 2);
  CHECK(small.value == 8);
  CHECK_FALSE(small.hypotheses_met);
  const BoundResult full = m_star_closed(9, 8, 3, 2);
  CHECK(full.value == 56);
  CHECK(full.regime == Regime::FullClique);
  CHECK(full.hypotheses_met);
}

TEST_CASE("cross_bound") {
  const CrossBoundResult a = cross_bound(10, 3, 3, 1, 2, Rational(1));
  CHECK(a.value == 72);
  CHECK(a.argmax == 1);
  CHECK_FALSE(a.hypotheses_met);
  CHECK(a.note.find("(2s+1)k") != std::string::npos);
  const CrossBoundResult b = cross_bound(12, 2, 2, 1, 2, Rational(1));
  CHECK(b.value == 22);
  CHECK(b.hypotheses_met);
  CHECK(cross_bound(12, 2, 2, 2, 2, Rational(3)).value ==
        Rational(brute::binom(12, 2) - brute::binom(10, 2) + 3 * brute::binom(10, 0)));
  const Rational half(1, 2);
  CHECK(cross_bound(12, 2, 3, 1, 2, half).value ==
        std::max(cross_bound_term(12, 2, 3, 1, half), cross_bound_term(12, 2, 3, 2, half)));
  CHECK_FALSE(cross_bound(20, 1, 1, 3, 3, Rational(1)).hypotheses_met);  // t > l
  CHECK_THROWS_AS(cross_bound(12, 2, 2, 3, 2, Rational(1)), ArgumentError);
  CHECK_THROWS_AS(cross_bound(12, 2, 2, 1, 2, Rational(0)), ArgumentError);
}

TEST_CASE("cross_direct_bound") {
  CHECK(cross_direct_bound(6, 100, 4, 1, 3, 2) == 162700);
  CHECK(cross_direct_bound(4, 64, 3, 1, 2, 2) == 2208);
  CHECK(cross_direct_bound(4, 64, 3, 1, 2, 20) == 7680);
  CHECK_THROWS_AS(cross_direct_bound(4, 10, 3, 1, 2, 2), ArgumentError);
  CHECK_THROWS_AS(cross_direct_bound(4, 64, 3, 2, 2, 2), ArgumentError);
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.5") == Rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("abc"), ArgumentError);
  CHECK_THROWS_AS(parse_rational("1/0"), ArgumentError);
  CHECK(to_string(Rational(3, 2)) == "3/2");
}
