#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace extremal {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact C(a, b); zero when b < 0, a < 0 or b > a. The zero convention makes
/// degenerate terms such as C(k-1, k) vanish.
BigInt binom(long long a, long long b);

/// The pair (p, r) indexing the clique-augmented matching family.
struct CliqueMatchingIndex {
  int p = 0;  // in [0, s]
  int r = 0;  // in [1, k-1]
  friend bool operator==(const CliqueMatchingIndex&, const CliqueMatchingIndex&) = default;
};

/// Unique p with (s-p)k + p + 1 <= q <= (s-p)k + p + k - 1, and
/// r = q - p - (s-p)k. Defined for k >= 2, s >= 1, s+k-1 <= q <= sk+k-1.
CliqueMatchingIndex derive_pr(int q, int k, int s);

/// |A(n,q,k,s)| = C(n,k) - C(n-p,k) + C(q-p,k)
///               + sum_{i=r+1}^{k-1} C(q-p-1, i-1) C(n-q, k-i).
BigInt size_A(int n, int q, int k, int s);

/// max{C(n,k) - C(n-s,k), C((s+1)k-1, k)}; requires n >= (s+1)k.
BigInt emc_bound(int n, int k, int s);

/// C(n-1,k-1) - C(n-k-1,k-1) + 1; requires n > 2k.
BigInt hm_bound(int n, int k);

/// max{|A(n,q,k,s)|, C(sk+k-1, k)}; requires s+k-1 <= q <= sk+k-1 and n >= (s+1)k.
BigInt conjecture_rhs(int n, int q, int k, int s);

/// C(n-1,k-1) + m_star_smaller.
BigInt recursion_rhs(int n, int q, int k, int s, const BigInt& m_star_smaller);

/// Which closed form produced a value.
enum class Regime {
  Zero,          // q >= (s+1)k: no family qualifies
  SpecialCase1,  // k = 2, exact for all n >= 2s+2
  FullClique,    // q = sk+k-1
  SpecialCase2,  // q = sk+k-2, exact for all n >= (s+1)k
  Main4,         // q = (s+1)k - l with l < s/(3k) and n close to (s+1)k
  Main2,         // n >= 8k^2 s
  Main1,         // shifted extremal value, n >= 8k^2 s
  Conjecture,    // unproven fallback
};

std::string_view regime_name(Regime r);

struct BoundResult {
  BigInt value;
  Regime regime = Regime::Conjecture;
  bool hypotheses_met = false;
  std::string note;
};

/// m*(n,q,k,s) for shifted families with nu = s and omega = q exactly.
/// Valid for k >= 2, s >= 1, s+k-1 <= q <= sk+k-1, n >= q.
BoundResult m_star_closed(int n, int q, int k, int s);

/// m(n,q,k,s) from the most specific proven theorem, in the order
/// SpecialCase1, FullClique, SpecialCase2, Main4, Main2; otherwise the
/// conjectured value with hypotheses_met = false. q >= (s+1)k gives 0.
/// Requires k >= 2, s >= 1, n >= (s+1)k and q >= k.
BoundResult m_closed(int n, int q, int k, int s);

/// Evaluates one theorem in isolation; nullopt when its hypotheses fail.
std::optional<BoundResult> m_regime(Regime regime, int n, int q, int k, int s);

/// Every proven regime whose hypotheses hold, in precedence order.
std::vector<BoundResult> m_applicable_regimes(int n, int q, int k, int s);

struct CrossBoundResult {
  Rational value;
  int argmax = 0;  // smallest maximizing i in [t, s]
  bool hypotheses_met = false;
  std::string note;  // names the failing inequality when hypotheses fail
};

/// max over t <= i <= s of C(n,k) - C(n-i,k) + beta * C(n-i, l-i), exact.
/// Structural violations (t < 0, s < t, beta <= 0, nonpositive n, k, l)
/// throw ArgumentError; the size hypotheses
/// n >= max{k+l, (2s+1)k, (l-t+1)(t+1)} are reported via hypotheses_met.
CrossBoundResult cross_bound(int n, int k, int l, int t, int s, const Rational& beta);

/// The i-th term of cross_bound.
Rational cross_bound_term(int n, int k, int l, int i, const Rational& beta);

/// max{C(n1-1,l-1)C(n2,k-l) + C(n1-1,l'-1)C(n2,k-l'), 2s C(n1-1,l'-1)C(n2,k-l')}.
/// Requires 1 <= l < l' <= k-1, n2 >= 4k n1, n1 >= l + l'.
BigInt cross_direct_bound(int n1, int n2, int k, int l, int lp, int s);

/// Parses "p", "p/q" or a finite decimal such as "0.25" into an exact rational.
Rational parse_rational(std::string_view text);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

}  // namespace extremal
