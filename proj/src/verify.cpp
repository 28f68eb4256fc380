#include "extremal/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

#include "extremal/constructions.hpp"
#include "extremal/errors.hpp"
#include "extremal/formulas.hpp"
#include "extremal/invariants.hpp"
#include "extremal/operators.hpp"
#include "extremal/sampling.hpp"
#include "extremal/shifting.hpp"

namespace extremal {
namespace {

constexpr std::size_t kMaxReportedViolations = 20;

std::string str(long long v) { return std::to_string(v); }

std::string cell(std::initializer_list<std::pair<const char*, long long>> kv) {
  std::string out;
  for (const auto& [key, value] : kv) {
    if (!out.empty()) out += ' ';
    out += key;
    out += '=';
    out += str(value);
  }
  return out;
}

class Collector {
 public:
  explicit Collector(std::string name) { report_.suite = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++report_.checks;
    if (ok) return;
    if (report_.violations++ < kMaxReportedViolations) report_.lines.push_back("violation: " + describe());
  }
  void note(std::string line) { report_.lines.push_back(std::move(line)); }
  void inconclusive(std::string line) {
    report_.inconclusive = true;
    report_.lines.push_back("inconclusive: " + std::move(line));
  }
  SuiteReport finish() {
    report_.passed = report_.violations == 0 && !report_.inconclusive;
    std::ostringstream summary;
    summary << report_.checks << " checks, " << report_.violations << " violations";
    report_.lines.push_back(summary.str());
    return std::move(report_);
  }

 private:
  SuiteReport report_;
};

int draw(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

long long as_ll(const BigInt& v) { return v.convert_to<long long>(); }

// --- shifting -------------------------------------------------------------

SuiteReport suite_shifting(const SuiteOptions& o) {
  Collector c("shifting");
  const int samples = o.samples.value_or(500);
  const int n_max = o.n_max.value_or(10);
  const int k_max = o.k.value_or(4);
  if (n_max < 2 || k_max < 1) throw ArgumentError("shifting suite requires n_max >= 2 and k >= 1");
  Rng rng(o.seed);
  for (int i = 0; i < samples; ++i) {
    const int n = draw(rng, 2, n_max);
    const int k = draw(rng, 1, std::min(k_max, n));
    const Family f = random_family(rng, n, k, uniform_below(rng, binomial_u64(n, k) + 1));
    const int nu = matching_number(f).nu;
    const int omega = clique_number(f).omega;
    const std::string tag = "sample " + str(i) + " " + cell({{"n", n}, {"k", k}});
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        const Family g = shift_ij(f, a, b);
        const std::string at = tag + " S_" + str(a) + str(b);
        c.check(g.size() == f.size(), [&] { return at + " changed the size"; });
        c.check(matching_number(g).nu <= nu, [&] { return at + " raised nu"; });
        c.check(clique_number(g).omega >= omega, [&] { return at + " lowered omega"; });
      }
    const Family closed = shift_closure(f);
    c.check(is_shifted(closed), [&] { return tag + " closure not shifted"; });
    c.check(shift_closure(closed) == closed, [&] { return tag + " closure not idempotent"; });
    c.check(closed.size() == f.size(), [&] { return tag + " closure changed the size"; });

    const int closed_omega = clique_number(closed).omega;
    for (int q = k; q <= n; ++q) {
      const bool top = closed.contains(VertexSet::interval(q - k + 1, q));
      c.check(top == (closed_omega >= q), [&] { return tag + " top-edge test disagrees with omega at q=" + str(q); });
    }
    const int closed_nu = matching_number(closed).nu;
    for (int s = std::max(closed_nu, 1); s <= closed_nu + 1; ++s) {
      const Trichotomy t = trichotomy_branches(closed, s);
      // For k = 1 the star and the full clique coincide.
      const int held = t.inside_star + t.mid_clique + t.full_clique;
      c.check(k == 1 ? held >= 1 : held == 1,
              [&] { return tag + " s=" + str(s) + " trichotomy fails for " + closed.to_string(); });
    }
  }
  return c.finish();
}

// --- constructions --------------------------------------------------------

SuiteReport suite_constructions(const SuiteOptions& o) {
  Collector c("constructions");
  const int n_max = o.n_max.value_or(12);
  for (int k = 2; k <= 4; ++k)
    for (int s = 1; s <= 3; ++s)
      for (int n = (s + 1) * k; n <= n_max; ++n) {
        const std::string base = cell({{"n", n}, {"k", k}, {"s", s}});
        for (int q = s + k - 1; q <= s * k + k - 1 && q <= n; ++q) {
          const Family a = clique_matching_family(n, q, k, s);
          const std::string at = "A " + base + " q=" + str(q);
          c.check(BigInt(a.size()) == size_A(n, q, k, s), [&] { return at + " size differs from size_A"; });
          c.check(matching_number(a).nu == s, [&] { return at + " nu != s"; });
          c.check(clique_number(a).omega == q, [&] { return at + " omega != q"; });
          c.check(is_shifted(a), [&] { return at + " not shifted"; });
        }
        const Family e = hitting_family(n, k, s);
        c.check(BigInt(e.size()) == binom(n, k) - binom(n - s, k), [&] { return "E " + base + " size"; });
        c.check(matching_number(e).nu == s, [&] { return "E " + base + " nu != s"; });
        c.check(covering_number(e).tau == s, [&] { return "E " + base + " tau != s"; });
        c.check(clique_number(e).omega == s + k - 1, [&] { return "E " + base + " omega != s+k-1"; });

        const Family b = cover_gap_family(n, k, s);
        c.check(matching_number(b).nu == s, [&] { return "B " + base + " nu != s"; });
        c.check(covering_number(b).tau == s + 1, [&] { return "B " + base + " tau != s+1"; });
        c.check(clique_number(b).omega == k + s, [&] { return "B " + base + " omega != k+s"; });
      }
  for (int k = 2; k <= 4; ++k)
    for (int n = 2 * k + 1; n <= n_max; ++n) {
      const Family h = hilton_milner_family(n, k);
      const std::string at = "HM " + cell({{"n", n}, {"k", k}});
      c.check(BigInt(h.size()) == hm_bound(n, k), [&] { return at + " size differs from hm_bound"; });
      c.check(clique_number(h).omega == k + 1, [&] { return at + " omega != k+1"; });
      c.check(is_intersecting(h), [&] { return at + " not intersecting"; });
    }
  for (int k = 2; k <= 4; ++k)
    for (int q = k + 1; q < 2 * k; ++q)
      for (int n = q; n <= std::min(n_max, 10); ++n) {
        const Family l = clique_intersecting_family(n, k, q);
        c.check(clique_number(l).omega == q, [&] { return "L " + cell({{"n", n}, {"k", k}, {"q", q}}) + " omega != q"; });
      }
  for (int k = 1; k <= 4; ++k)
    for (int q = k; q <= n_max; ++q) {
      const Family f = clique_family(q, q, k);
      c.check(matching_number(f).nu == q / k, [&] { return "CLIQUE " + cell({{"q", q}, {"k", k}}) + " nu != q/k"; });
    }
  return c.finish();
}

// --- conjecture -----------------------------------------------------------

SearchProblem problem(int n, int q, int k, int s, const SearchBudget& budget) {
  SearchProblem p;
  p.n = n;
  p.q = q;
  p.k = k;
  p.s = s;
  p.budget = budget;
  return p;
}

SuiteReport suite_conjecture(const SuiteOptions& o) {
  Collector c("conjecture");
  const int k = o.k.value_or(2), s = o.s.value_or(2);
  const int n_max = o.n_max.value_or(9);
  if (k < 2 || s < 1) throw ArgumentError("conjecture suite requires k >= 2 and s >= 1");
  for (int n = (s + 1) * k; n <= n_max; ++n)
    for (int q = s + k - 1; q <= s * k + k - 1; ++q) {
      const SearchResult r = exact_m(problem(n, q, k, s, o.budget));
      const std::string at = cell({{"n", n}, {"q", q}, {"k", k}, {"s", s}});
      if (!r.proven_optimal) {
        c.inconclusive(at + " oracle budget exhausted (best " + str(r.value) + ")");
        continue;
      }
      const long long rhs = as_ll(conjecture_rhs(n, q, k, s));
      const BoundResult closed = m_closed(n, q, k, s);
      std::string line = at + ": oracle " + str(r.value) + ", conjecture " + str(rhs);
      if (closed.hypotheses_met) line += ", " + std::string(regime_name(closed.regime)) + " " + to_string(closed.value);
      c.note(line);
      c.check(r.value == rhs, [&] { return at + " oracle " + str(r.value) + " != conjecture " + str(rhs) +
                                           ", witness " + r.witness.to_string(); });
      if (closed.hypotheses_met)
        c.check(BigInt(r.value) == closed.value, [&] { return at + " oracle disagrees with proven regime " +
                                                              std::string(regime_name(closed.regime)); });
    }
  return c.finish();
}

// --- identities -----------------------------------------------------------

SuiteReport from_identity(const char* name, const IdentityReport& r) {
  Collector c(name);
  SuiteReport out = c.finish();
  out.checks = r.checks;
  out.violations = r.violations;
  out.inconclusive = r.inconclusive;
  out.passed = r.holds && !r.inconclusive;
  out.lines = {r.detail};
  if (r.counterexample) out.lines.push_back("counterexample: " + r.counterexample->to_string());
  return out;
}

SuiteReport suite_monotonicity(const SuiteOptions& o) {
  IdentityParams p;
  p.k_max = o.k.value_or(5);
  p.s_max = o.s.value_or(5);
  p.n_max = o.n_max.value_or(200);
  return from_identity("monotonicity", verify_identity(Identity::Monotonicity, p));
}

SuiteReport suite_trichotomy(const SuiteOptions& o) {
  IdentityParams p;
  p.seed = o.seed;
  p.samples = o.samples.value_or(1000);
  p.n_max = o.n_max.value_or(9);
  p.k_max = o.k.value_or(3);
  return from_identity("trichotomy", verify_identity(Identity::Trichotomy, p));
}

// --- cross-intersecting bound ---------------------------------------------

struct CrossCell {
  int n, k, l, t, s;
};

std::vector<CrossCell> cross_cells(int n_max) {
  std::vector<CrossCell> out;
  for (int n = 1; n <= n_max; ++n)
    for (int k = 1; k <= 3; ++k)
      for (int l = 1; l <= 3; ++l)
        for (int s = 1; s <= 3; ++s)
          for (int t = 0; t <= s; ++t)
            if (cross_bound(n, k, l, t, s, Rational(1)).hypotheses_met) out.push_back({n, k, l, t, s});
  return out;
}

Family filter(int n, int k, const std::function<bool(Edge)>& keep) {
  std::vector<Edge> out;
  for_each_subset_of_size(VertexSet::from_mask(ground_mask(n)), k, [&](Edge e) {
    if (keep(e)) out.push_back(e);
  });
  return Family(n, k, std::move(out));
}

SuiteReport suite_cross(const SuiteOptions& o) {
  Collector c("cross");
  const int n_max = o.n_max.value_or(12);
  const std::vector<CrossCell> cells = cross_cells(n_max);
  const std::array<Rational, 3> betas = {Rational(1), Rational(2), Rational(1, 2)};
  for (const CrossCell& x : cells) {
    const std::string base = cell({{"n", x.n}, {"k", x.k}, {"l", x.l}, {"t", x.t}, {"s", x.s}});
    for (int i = x.t; i <= x.s; ++i) {
      const VertexSet head = VertexSet::interval(1, i);
      const Family a = filter(x.n, x.k, [&](Edge e) { return e.meets(head); });
      const Family b = filter(x.n, x.l, [&](Edge e) { return head.subset_of(e); });
      const std::string at = base + " i=" + str(i);
      c.check(matching_number(a).nu <= x.s, [&] { return at + " A_i has nu > s"; });
      c.check(x.t == 0 || is_t_intersecting(b, x.t), [&] { return at + " B_i not t-intersecting"; });
      c.check(are_cross_intersecting(a, b), [&] { return at + " pair not cross-intersecting"; });
      for (const Rational& beta : betas) {
        const Rational lhs = Rational(static_cast<long long>(a.size())) + beta * static_cast<long long>(b.size());
        c.check(lhs == cross_bound_term(x.n, x.k, x.l, i, beta),
                [&] { return at + " beta=" + to_string(beta) + " |A_i|+beta|B_i| = " + to_string(lhs) +
                             " differs from the i-th term"; });
        c.check(lhs <= cross_bound(x.n, x.k, x.l, x.t, x.s, beta).value,
                [&] { return at + " beta=" + to_string(beta) + " exceeds the bound"; });
      }
    }
  }
  c.note(str(static_cast<long long>(cells.size())) + " parameter cells satisfy the hypotheses");

  Rng rng(o.seed);
  const int samples = o.samples.value_or(1000);
  for (int i = 0; i < samples && !cells.empty(); ++i) {
    const CrossCell x = cells[uniform_below(rng, cells.size())];
    const Family a =
        random_family_with_matching_at_most(rng, x.n, x.k, x.s, uniform_below(rng, binomial_u64(x.n, x.k) + 1));
    Family all_l = Family::complete(x.n, x.l);
    std::vector<Edge> order(all_l.begin(), all_l.end());
    for (std::size_t j = 0; j + 1 < order.size(); ++j)
      std::swap(order[j], order[j + uniform_below(rng, order.size() - j)]);
    const std::uint64_t target = uniform_below(rng, order.size() + 1);
    std::vector<Edge> kept;
    for (Edge e : order) {
      if (kept.size() >= target) break;
      if (!std::all_of(a.begin(), a.end(), [&](Edge f) { return f.meets(e); })) continue;
      if (!std::all_of(kept.begin(), kept.end(), [&](Edge f) { return (f & e).size() >= x.t; })) continue;
      kept.push_back(e);
    }
    const Family b(x.n, x.l, std::move(kept));
    const Rational beta(static_cast<long long>(1 + uniform_below(rng, 4)), static_cast<long long>(1 + uniform_below(rng, 2)));
    const Rational lhs = Rational(static_cast<long long>(a.size())) + beta * static_cast<long long>(b.size());
    const Rational bound = cross_bound(x.n, x.k, x.l, x.t, x.s, beta).value;
    const std::string at = "random pair " + str(i) + " " +
                           cell({{"n", x.n}, {"k", x.k}, {"l", x.l}, {"t", x.t}, {"s", x.s}});
    c.check(matching_number(a).nu <= x.s && are_cross_intersecting(a, b) && (x.t == 0 || is_t_intersecting(b, x.t)),
            [&] { return at + " sampler produced an invalid pair"; });
    c.check(lhs <= bound, [&] { return at + " beta=" + to_string(beta) + " value " + to_string(lhs) +
                                       " exceeds bound " + to_string(bound); });
  }
  return c.finish();
}

// --- cyclic intervals -----------------------------------------------------

void cyclic_check(Collector& c, const std::vector<int>& sigma, int b, int d) {
  const int m = static_cast<int>(sigma.size());
  const Family bs = cyclic_intervals(sigma, b), ds = cyclic_intervals(sigma, d);
  // meets[x] has bit y set when the x-th b-interval meets the y-th d-interval.
  std::vector<std::uint32_t> meets(static_cast<std::size_t>(m), 0);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (bs[x].meets(ds[y])) meets[x] |= 1u << y;
  const std::uint32_t full = (1u << m) - 1;
  std::vector<std::uint32_t> compat(std::size_t{1} << m);
  compat[0] = full;
  std::uint64_t pairs = 0;
  bool ok_total = true, ok_both = true;
  for (std::uint32_t bm = 0; bm <= full; ++bm) {
    if (bm != 0) compat[bm] = compat[bm & (bm - 1)] & meets[std::countr_zero(bm)];
    const int bsize = std::popcount(bm);
    // Every subset of compat[bm] is a cross-intersecting partner of bm.
    const std::uint32_t allowed = compat[bm];
    for (std::uint32_t dm = allowed;; dm = (dm - 1) & allowed) {
      ++pairs;
      const int total = bsize + std::popcount(dm);
      ok_total = ok_total && total <= m;
      if (bm != 0 && dm != 0) ok_both = ok_both && total <= b + d;
      if (dm == 0) break;
    }
  }
  const std::string at = cell({{"m", m}, {"b", b}, {"d", d}}) + " sigma " + VertexSet::of(sigma).to_string();
  c.check(ok_total, [&] { return at + " some pair has |B|+|D| > m"; });
  c.check(ok_both, [&] { return at + " some nonempty pair has |B|+|D| > b+d"; });
  c.note(at.substr(0, at.find(" sigma")) + (sigma == identity_permutation(m) ? " identity" : " shuffled") + ": " +
         str(static_cast<long long>(pairs)) + " cross-intersecting pairs");
}

SuiteReport suite_cyclic(const SuiteOptions& o) {
  Collector c("cyclic");
  const int m_max = o.n_max.value_or(8);
  if (m_max > 12) throw ArgumentError("cyclic suite enumerates 4^m pairs; use m <= 12");
  Rng rng(o.seed);
  for (int m = 2; m <= m_max; ++m) {
    std::vector<int> shuffled = identity_permutation(m);
    for (int i = m - 1; i > 0; --i) std::swap(shuffled[i], shuffled[uniform_below(rng, static_cast<std::uint64_t>(i + 1))]);
    for (int b = 1; b < m; ++b)
      for (int d = 1; b + d <= m; ++d) {
        cyclic_check(c, identity_permutation(m), b, d);
        if (shuffled != identity_permutation(m)) cyclic_check(c, shuffled, b, d);
      }
  }
  return c.finish();
}

// --- closed-form regimes --------------------------------------------------

SuiteReport suite_regime(const SuiteOptions&) {
  Collector c("regime");
  {
    const auto main4 = m_regime(Regime::Main4, 16, 15, 2, 7);
    const auto k2 = m_regime(Regime::SpecialCase1, 16, 15, 2, 7);
    const BoundResult closed = m_closed(16, 15, 2, 7);
    c.check(main4 && main4->value == 105 && main4->hypotheses_met, [] { return "main-4 at (16,15,2,7) is not 105"; });
    c.check(k2 && k2->value == 105 && k2->hypotheses_met, [] { return "specialcase-1 at (16,15,2,7) is not 105"; });
    c.check(closed.value == 105 && closed.hypotheses_met, [] { return "m_closed(16,15,2,7) is not 105"; });
    c.note("m(16,15,2,7): main-4 " + (main4 ? to_string(main4->value) : std::string("n/a")) + ", specialcase-1 " +
           (k2 ? to_string(k2->value) : std::string("n/a")) + ", m_closed " + to_string(closed.value) + " (" +
           std::string(regime_name(closed.regime)) + ")");
  }
  struct Spot {
    int n, q, k, s;
    long long value;
    Regime regime;
  };
  for (const Spot& x : {Spot{9, 4, 2, 2, 11, Regime::SpecialCase1}, Spot{9, 7, 3, 2, 56, Regime::SpecialCase2},
                        Spot{64, 3, 2, 2, 125, Regime::SpecialCase1}, Spot{12, 8, 3, 2, 56, Regime::FullClique},
                        Spot{6, 6, 2, 2, 0, Regime::Zero}}) {
    const BoundResult r = m_closed(x.n, x.q, x.k, x.s);
    const std::string at = "m_closed" + cell({{"n", x.n}, {"q", x.q}, {"k", x.k}, {"s", x.s}});
    c.check(r.value == x.value && r.regime == x.regime && r.hypotheses_met,
            [&] { return at + " gave " + to_string(r.value) + " via " + std::string(regime_name(r.regime)); });
  }
  // Wherever two proven regimes apply they must agree.
  std::uint64_t overlaps = 0;
  for (int k = 2; k <= 5; ++k)
    for (int s = 1; s <= 5; ++s)
      for (int n = (s + 1) * k; n <= 8 * k * k * s + 2 * k; ++n)
        for (int q = k; q <= (s + 1) * k; ++q) {
          const std::vector<BoundResult> all = m_applicable_regimes(n, q, k, s);
          if (all.size() > 1) ++overlaps;
          for (std::size_t i = 1; i < all.size(); ++i)
            c.check(all[i].value == all[0].value, [&] {
              return cell({{"n", n}, {"q", q}, {"k", k}, {"s", s}}) + " " + std::string(regime_name(all[0].regime)) +
                     " " + to_string(all[0].value) + " vs " + std::string(regime_name(all[i].regime)) + " " +
                     to_string(all[i].value);
            });
        }
  c.note(str(static_cast<long long>(overlaps)) + " cells with overlapping proven regimes");
  return c.finish();
}

// --- Kruskal-Katona -------------------------------------------------------

// Index of every r-subset of [n] (colex rank) as a bit position.
std::vector<std::uint32_t> shadow_masks(int n, int k) {
  const Family lower = Family::complete(n, k - 1);
  std::vector<std::uint32_t> out;
  for (Edge e : Family::complete(n, k)) {
    std::uint32_t m = 0;
    for (int v : e.vertices()) {
      const Edge g = e.without(v);
      const auto it = std::lower_bound(lower.begin(), lower.end(), g);
      m |= 1u << (it - lower.begin());
    }
    out.push_back(m);
  }
  return out;
}

SuiteReport suite_kruskal_katona(const SuiteOptions& o) {
  Collector c("kruskal-katona");
  const int n_max = o.n_max.value_or(7);
  const int samples = o.samples.value_or(20000);
  constexpr std::uint64_t kExhaustiveEdges = 21;
  Rng rng(o.seed);
  for (int n = 3; n <= n_max; ++n)
    for (int k = 2; k <= std::min(3, n - 1); ++k) {
      const std::uint64_t total = binomial_u64(n, k);
      if (binomial_u64(n, k - 1) > 32) continue;
      std::vector<std::size_t> colex_shadow(total + 1);
      for (std::uint64_t m = 0; m <= total; ++m) colex_shadow[m] = shadow(colex_family(n, k, m), 1).size();
      const std::vector<std::uint32_t> sh = shadow_masks(n, k);
      const std::string at = cell({{"n", n}, {"k", k}});
      if (total <= kExhaustiveEdges) {
        std::vector<std::uint32_t> table(std::size_t{1} << total);
        bool ok = true;
        for (std::uint64_t sub = 1; sub < table.size(); ++sub) {
          table[sub] = table[sub & (sub - 1)] | sh[std::countr_zero(sub)];
          ok = ok && static_cast<std::size_t>(std::popcount(table[sub])) >= colex_shadow[std::popcount(sub)];
        }
        c.check(ok, [&] { return at + " some family has a smaller shadow than the colex segment"; });
        c.note(at + ": all " + str(static_cast<long long>(table.size())) + " families checked");
      } else {
        const Family all = Family::complete(n, k);
        for (int i = 0; i < samples; ++i) {
          const Family f = random_family(rng, n, k, uniform_below(rng, total + 1));
          const std::size_t got = shadow(f, 1).size();
          c.check(got >= colex_shadow[f.size()], [&] { return at + " family " + f.to_string() + " beats colex"; });
          if (k >= 3) {
            c.check(shadow(shadow(f, 1), 1) == shadow(f, 2), [&] { return at + " iterated shadow differs"; });
          }
        }
        c.note(at + ": " + str(samples) + " seeded samples");
      }
    }
  return c.finish();
}

// --- Hilton's lemma -------------------------------------------------------

SuiteReport suite_hilton(const SuiteOptions& o) {
  Collector c("hilton");
  const int n_max = o.n_max.value_or(6);
  for (int n = 2; n <= n_max; ++n)
    for (int k = 1; k <= 3; ++k)
      for (int l = 1; l <= 3 && k + l <= n; ++l) {
        const Family ks = Family::complete(n, k), ls = Family::complete(n, l);
        const std::size_t nk = ks.size(), nl = ls.size();
        if (nk > 22 || nl > 32) continue;
        // largest[a]: the biggest b with lex(n,k,a) and lex(n,l,b) cross-intersecting.
        std::vector<std::size_t> largest(nk + 1);
        for (std::size_t a = 0; a <= nk; ++a) {
          const Family la = lex_family(n, k, a);
          std::size_t b = nl;
          while (b > 0 && !are_cross_intersecting(la, lex_family(n, l, b))) --b;
          largest[a] = b;
        }
        std::vector<std::uint32_t> meets(nk, 0);
        for (std::size_t x = 0; x < nk; ++x)
          for (std::size_t y = 0; y < nl; ++y)
            if (ks[x].meets(ls[y])) meets[x] |= 1u << y;
        std::vector<std::uint32_t> compat(std::size_t{1} << nk);
        compat[0] = nl == 32 ? ~0u : (1u << nl) - 1;
        bool ok = true;
        for (std::uint64_t sub = 1; sub < compat.size(); ++sub) {
          compat[sub] = compat[sub & (sub - 1)] & meets[std::countr_zero(sub)];
          ok = ok && static_cast<std::size_t>(std::popcount(compat[sub])) <= largest[std::popcount(sub)];
        }
        ok = ok && nl <= largest[0];
        c.check(ok, [&] { return cell({{"n", n}, {"k", k}, {"l", l}}) + " lex replacement breaks cross-intersection"; });
      }
  return c.finish();
}

// --- shifting loses nothing for the oracle --------------------------------

SuiteReport suite_oracle_shift(const SuiteOptions& o) {
  Collector c("oracle-shift");
  const int samples = o.samples.value_or(200);
  const int n_max = o.n_max.value_or(9);
  Rng rng(o.seed);
  for (int i = 0; i < samples; ++i) {
    const int k = draw(rng, 2, 3);
    const int n = draw(rng, k + 1, std::max(k + 1, n_max));
    const int s = draw(rng, 1, 3);
    const Family f = random_family_with_matching_at_most(rng, n, k, s, uniform_below(rng, binomial_u64(n, k) + 1));
    const Family g = shift_closure(f);
    const std::string at = "sample " + str(i) + " " + cell({{"n", n}, {"k", k}, {"s", s}});
    c.check(g.size() == f.size(), [&] { return at + " size changed"; });
    c.check(matching_number(g).nu <= matching_number(f).nu, [&] { return at + " nu increased"; });
    c.check(clique_number(g).omega >= clique_number(f).omega, [&] { return at + " omega decreased"; });
  }
  return c.finish();
}

// --- oracle against proven values -----------------------------------------

SuiteReport suite_oracle(const SuiteOptions& o) {
  Collector c("oracle");
  for (int n = 6; n <= 9; ++n)
    for (int q = 3; q <= 5; ++q) {
      const SearchResult r = exact_m(problem(n, q, 2, 2, o.budget));
      const long long expect = std::max(10LL, as_ll(binom(q, 2)) + (5 - q) * (n - q));
      const std::string at = "m" + cell({{"n", n}, {"q", q}, {"k", 2}, {"s", 2}});
      if (!r.proven_optimal) {
        c.inconclusive(at + " budget exhausted");
        continue;
      }
      c.check(r.value == expect, [&] { return at + " oracle " + str(r.value) + " != " + str(expect); });
    }
  {
    const SearchResult star = exact_m_star(problem(6, 4, 2, 2, o.budget));
    const SearchResult direct = exact_m(problem(6, 4, 2, 2, o.budget));
    const long long a = as_ll(size_A(6, 4, 2, 2)), rhs = as_ll(conjecture_rhs(6, 4, 2, 2));
    c.check(star.proven_optimal && star.value == 9 && a == 8,
            [&] { return "m*(6,4,2,2) = " + str(star.value) + ", size_A = " + str(a); });
    c.check(direct.proven_optimal && direct.value == 10 && rhs == 10,
            [&] { return "m(6,4,2,2) = " + str(direct.value) + ", conjecture_rhs = " + str(rhs); });
    c.note("m*(6,4,2,2) = " + str(star.value) + " > size_A(6,4,2,2) = " + str(a) + "; m(6,4,2,2) = " +
           str(direct.value) + " = conjecture_rhs(6,4,2,2) = " + str(rhs));
  }
  for (int n = 6; n <= 8; ++n)
    for (int q = 2; q <= 5; ++q) {
      IdentityParams p;
      p.n = n;
      p.q = q;
      p.k = 2;
      p.s = 2;
      p.budget = o.budget;
      const IdentityReport r = verify_identity(Identity::StarMax, p);
      const std::string at = "star-max " + cell({{"n", n}, {"q", q}, {"k", 2}, {"s", 2}});
      if (r.inconclusive) {
        c.inconclusive(at);
        continue;
      }
      c.check(r.holds, [&] { return at + " " + r.detail; });
    }
  return c.finish();
}

struct SuiteEntry {
  SuiteInfo info;
  SuiteReport (*run)(const SuiteOptions&);
};

const std::array<SuiteEntry, 12> kSuites = {{
    {{"shifting", "S_ij keeps size, never raises nu or lowers omega; closure is shifted and idempotent (500 samples)"},
     suite_shifting},
    {{"constructions", "sizes and nu, tau, omega of A, E, B, HM, L, CLIQUE for n <= 12"}, suite_constructions},
    {{"conjecture", "oracle m against the conjectured value (--k, --s, --n-max; default 2, 2, 9)"}, suite_conjecture},
    {{"monotonicity", "size_A(n,q) >= size_A(n,q+1) for k, s <= 5, 2q <= n <= 200"}, suite_monotonicity},
    {{"cross", "equality pairs attain each term; random cross-intersecting pairs stay below the bound"}, suite_cross},
    {{"cyclic", "all cross-intersecting interval families for m <= 8"}, suite_cyclic},
    {{"regime", "spot values of m_closed and agreement of overlapping theorems"}, suite_regime},
    {{"kruskal-katona", "colex segments minimize the shadow (n <= 7, k <= 3)"}, suite_kruskal_katona},
    {{"hilton", "lex replacement keeps cross-intersecting pairs cross-intersecting (n <= 6)"}, suite_hilton},
    {{"trichotomy", "clique-number trichotomy on 1000 random shifted families"}, suite_trichotomy},
    {{"oracle-shift", "shift_closure keeps size, nu and omega in the right direction (200 samples)"},
     suite_oracle_shift},
    {{"oracle", "oracle against the k = 2 theorem, the (6,4,2,2) boundary cell and direct vs star search"},
     suite_oracle},
}};

const std::array<SuiteInfo, kSuites.size()> kInfos = [] {
  std::array<SuiteInfo, kSuites.size()> out{};
  for (std::size_t i = 0; i < kSuites.size(); ++i) out[i] = kSuites[i].info;
  return out;
}();

}  // namespace

std::span<const SuiteInfo> suite_names() { return kInfos; }

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  for (const auto& entry : kSuites)
    if (entry.info.name == name) return entry.run(options);
  std::string known;
  for (const auto& entry : kSuites) known += (known.empty() ? "" : ", ") + std::string(entry.info.name);
  throw ArgumentError("unknown suite '" + std::string(name) + "' (expected one of: " + known + ")");
}

}  // namespace extremal
