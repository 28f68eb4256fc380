#include "extremal/formulas.hpp"

#include <algorithm>
#include <charconv>

#include "extremal/errors.hpp"

namespace extremal {
namespace {

std::string str(long long v) { return std::to_string(v); }

void require(bool ok, const std::string& what) {
  if (!ok) throw ArgumentError(what);
}

void check_ks(int k, int s) {
  require(k >= 2, "k must be at least 2, got " + str(k));
  require(s >= 1, "s must be at least 1, got " + str(s));
}

void check_q_range(int q, int k, int s) {
  const long long lo = static_cast<long long>(s) + k - 1;
  const long long hi = static_cast<long long>(s) * k + k - 1;
  require(q >= lo && q <= hi, "q must satisfy s+k-1 <= q <= sk+k-1 (" + str(lo) + " <= q <= " + str(hi) +
                                  "), got q=" + str(q));
}

void check_n_emc(int n, int k, int s) {
  const long long need = (static_cast<long long>(s) + 1) * k;
  require(n >= need, "n must satisfy n >= (s+1)k = " + str(need) + ", got n=" + str(n));
}

bool large_n(int n, int k, int s) { return static_cast<long long>(n) >= 8LL * k * k * s; }

BoundResult make(BigInt v, Regime r, bool met, std::string note = {}) {
  return BoundResult{std::move(v), r, met, std::move(note)};
}

}  // namespace

BigInt binom(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt r = 1;
  for (long long i = 1; i <= b; ++i) {
    r *= (a - b + i);
    r /= i;
  }
  return r;
}

CliqueMatchingIndex derive_pr(int q, int k, int s) {
  check_ks(k, s);
  check_q_range(q, k, s);
  for (int p = 0; p <= s; ++p) {
    const int lo = (s - p) * k + p + 1;
    const int hi = (s - p) * k + p + k - 1;
    if (lo <= q && q <= hi) return {p, q - p - (s - p) * k};
  }
  throw std::logic_error("derive_pr: intervals failed to cover q=" + str(q));
}

BigInt size_A(int n, int q, int k, int s) {
  const auto [p, r] = derive_pr(q, k, s);
  require(n >= q, "size_A requires n >= q, got n=" + str(n) + " q=" + str(q));
  BigInt v = binom(n, k) - binom(n - p, k) + binom(q - p, k);
  for (int i = r + 1; i <= k - 1; ++i) v += binom(q - p - 1, i - 1) * binom(n - q, k - i);
  return v;
}

BigInt emc_bound(int n, int k, int s) {
  require(k >= 1 && s >= 1, "emc_bound requires k >= 1 and s >= 1");
  check_n_emc(n, k, s);
  return std::max<BigInt>(binom(n, k) - binom(n - s, k), binom((s + 1LL) * k - 1, k));
}

BigInt hm_bound(int n, int k) {
  require(k >= 1, "hm_bound requires k >= 1");
  require(n > 2 * k, "hm_bound requires n > 2k = " + str(2 * k) + ", got n=" + str(n));
  return binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 1;
}

BigInt conjecture_rhs(int n, int q, int k, int s) {
  check_ks(k, s);
  check_q_range(q, k, s);
  check_n_emc(n, k, s);
  return std::max<BigInt>(size_A(n, q, k, s), binom(static_cast<long long>(s) * k + k - 1, k));
}

BigInt recursion_rhs(int n, int q, int k, int s, const BigInt& m_star_smaller) {
  require(n >= 1 && q >= 1 && k >= 1 && s >= 1, "recursion_rhs requires positive n, q, k, s");
  require(m_star_smaller >= 0, "m_star_smaller must be nonnegative");
  return binom(n - 1, k - 1) + m_star_smaller;
}

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::Zero: return "zero";
    case Regime::SpecialCase1: return "specialcase-1";
    case Regime::FullClique: return "full-clique";
    case Regime::SpecialCase2: return "specialcase-2";
    case Regime::Main4: return "main-4";
    case Regime::Main2: return "main-2";
    case Regime::Main1: return "main-1";
    case Regime::Conjecture: return "conjecture";
  }
  return "unknown";
}

BoundResult m_star_closed(int n, int q, int k, int s) {
  check_ks(k, s);
  check_q_range(q, k, s);
  require(n >= q, "m_star_closed requires n >= q, got n=" + str(n) + " q=" + str(q));
  const int top = s * k + k - 1;
  if (q == top) return make(binom(top, k), Regime::FullClique, true);
  BigInt v = size_A(n, q, k, s);
  if (q >= s + k && q <= top - 1 && large_n(n, k, s)) return make(std::move(v), Regime::Main1, true);
  return make(std::move(v), Regime::Main1, false, "outside proven regime");
}

std::optional<BoundResult> m_regime(Regime regime, int n, int q, int k, int s) {
  check_ks(k, s);
  const long long sk = static_cast<long long>(s) * k;
  const long long emc_n = sk + k;
  if (n < emc_n || q < k) return std::nullopt;
  switch (regime) {
    case Regime::Zero:
      if (q >= emc_n) return make(0, Regime::Zero, true, "a q-clique contains s+1 disjoint edges");
      return std::nullopt;
    case Regime::SpecialCase1: {
      if (k != 2 || s < 2 || q < s + 1 || q > 2 * s + 1 || n < 2 * s + 2) return std::nullopt;
      BigInt a = binom(2 * s + 1, 2);
      BigInt b = binom(q, 2) + BigInt(2 * s + 1 - q) * (n - q);
      return make(std::max(a, b), Regime::SpecialCase1, true);
    }
    case Regime::FullClique:
      if (q != sk + k - 1) return std::nullopt;
      return make(binom(sk + k - 1, k), Regime::FullClique, true);
    case Regime::SpecialCase2: {
      if (q != sk + k - 2) return std::nullopt;
      BigInt a = binom(sk + k - 1, k);
      BigInt b = binom(q, k) + binom(q - 1, k - 2) * (n - q);
      return make(std::max(a, b), Regime::SpecialCase2, true);
    }
    case Regime::Main4: {
      const long long l = emc_n - q;
      // l < s/(3k) and n <= (s+1)k + s/(3k) - l, cleared of denominators.
      if (l < 1 || 3LL * k * l >= s) return std::nullopt;
      if (3LL * k * n > 3LL * k * (emc_n - l) + s) return std::nullopt;
      return make(binom(sk + k - 1, k), Regime::Main4, true);
    }
    case Regime::Main2:
      if (!large_n(n, k, s) || q >= emc_n) return std::nullopt;
      if (q >= s + k) return make(size_A(n, q, k, s), Regime::Main2, true);
      return make(binom(n, k) - binom(n - s, k), Regime::Main2, true);
    case Regime::Main1:
    case Regime::Conjecture:
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<BoundResult> m_applicable_regimes(int n, int q, int k, int s) {
  std::vector<BoundResult> out;
  for (Regime r : {Regime::Zero, Regime::SpecialCase1, Regime::FullClique, Regime::SpecialCase2, Regime::Main4,
                   Regime::Main2})
    if (auto v = m_regime(r, n, q, k, s)) out.push_back(std::move(*v));
  return out;
}

BoundResult m_closed(int n, int q, int k, int s) {
  check_ks(k, s);
  check_n_emc(n, k, s);
  require(q >= k, "q must satisfy q >= k, got q=" + str(q));
  auto all = m_applicable_regimes(n, q, k, s);
  if (!all.empty()) return std::move(all.front());
  // Below s+k-1 every conjectured extremal family already has omega >= q.
  const int q_eff = std::max(q, s + k - 1);
  return make(conjecture_rhs(n, q_eff, k, s), Regime::Conjecture, false, "Conjecture only");
}

Rational cross_bound_term(int n, int k, int l, int i, const Rational& beta) {
  return Rational(binom(n, k) - binom(n - i, k)) + beta * Rational(binom(n - i, l - i));
}

CrossBoundResult cross_bound(int n, int k, int l, int t, int s, const Rational& beta) {
  require(n >= 1 && k >= 1 && l >= 1 && s >= 1, "cross_bound requires positive n, k, l, s");
  require(t >= 0, "cross_bound requires t >= 0, got t=" + str(t));
  require(s >= t, "cross_bound requires s >= t, got s=" + str(s) + " t=" + str(t));
  require(beta > 0, "cross_bound requires beta > 0");

  CrossBoundResult out;
  out.hypotheses_met = true;
  auto check = [&](long long need, const std::string& name) {
    if (out.hypotheses_met && n < need) {
      out.hypotheses_met = false;
      out.note = "hypothesis n >= " + name + " = " + str(need) + " fails for n=" + str(n);
    }
  };
  check(static_cast<long long>(k) + l, "k+l");
  check((2LL * s + 1) * k, "(2s+1)k");
  check((static_cast<long long>(l) - t + 1) * (t + 1), "(l-t+1)(t+1)");
  // With t > l a single l-set is vacuously t-intersecting while every term drops its B part.
  if (out.hypotheses_met && t > l) {
    out.hypotheses_met = false;
    out.note = "hypothesis t <= l fails for t=" + str(t) + " l=" + str(l);
  }

  out.argmax = t;
  out.value = cross_bound_term(n, k, l, t, beta);
  for (int i = t + 1; i <= s; ++i) {
    Rational v = cross_bound_term(n, k, l, i, beta);
    if (v > out.value) {
      out.value = v;
      out.argmax = i;
    }
  }
  return out;
}

BigInt cross_direct_bound(int n1, int n2, int k, int l, int lp, int s) {
  require(s >= 1, "cross_direct_bound requires s >= 1");
  require(1 <= l && l < lp && lp <= k - 1, "cross_direct_bound requires 1 <= l < l' <= k-1, got l=" + str(l) +
                                                 " l'=" + str(lp) + " k=" + str(k));
  require(static_cast<long long>(n2) >= 4LL * k * n1,
          "cross_direct_bound requires n2 >= 4k*n1 = " + str(4LL * k * n1) + ", got n2=" + str(n2));
  require(n1 >= l + lp, "cross_direct_bound requires n1 >= l+l' = " + str(l + lp) + ", got n1=" + str(n1));
  const BigInt second_part = binom(n1 - 1, lp - 1) * binom(n2, k - lp);
  const BigInt first = binom(n1 - 1, l - 1) * binom(n2, k - l) + second_part;
  const BigInt second = 2 * BigInt(s) * second_part;
  return std::max(first, second);
}

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational { throw ArgumentError("cannot parse rational '" + std::string(text) + "'"); };
  if (text.empty()) return fail();
  auto parse_int = [&](std::string_view s) -> BigInt {
    if (s.empty()) fail();
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) fail();
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') fail();
    return BigInt(std::string(s));
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) fail();
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    const bool negative = !whole.empty() && whole[0] == '-';
    BigInt w = (whole.empty() || whole == "-" || whole == "+") ? BigInt(0) : parse_int(whole);
    BigInt f = frac.empty() ? BigInt(0) : parse_int(frac);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational r = Rational(w) + Rational(negative ? BigInt(-f) : f, scale);
    return r;
  }
  return Rational(parse_int(text));
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace extremal
