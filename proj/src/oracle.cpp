#include "extremal/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "extremal/constructions.hpp"
#include "extremal/errors.hpp"
#include "extremal/formulas.hpp"
#include "extremal/invariants.hpp"
#include "extremal/operators.hpp"
#include "extremal/sampling.hpp"
#include "extremal/shifting.hpp"

namespace extremal {
namespace {

using Clock = std::chrono::steady_clock;

// Colex rank of a k-set: sum of C(c_i, i+1) over its 0-based elements c_0 < c_1 < ...
class ColexRanker {
 public:
  explicit ColexRanker(int n) {
    for (int a = 0; a <= n; ++a) {
      table_[a][0] = 1;
      for (int b = 1; b <= a; ++b) {
        const std::uint64_t x = table_[a - 1][b - 1], y = table_[a - 1][b];
        table_[a][b] = (x > ~std::uint64_t{0} - y) ? ~std::uint64_t{0} : x + y;
      }
    }
  }
  std::uint64_t rank(std::uint64_t mask) const {
    std::uint64_t r = 0;
    int i = 1;
    for (; mask != 0; mask &= mask - 1, ++i) r += table_[std::countr_zero(mask)][i];
    return r;
  }

 private:
  std::uint64_t table_[kMaxVertices + 1][kMaxVertices + 1] = {};
};

enum : std::uint8_t { kFree = 0, kIn = 1, kOut = 2 };

// Immutable description of one search instance, shared by all workers.
struct Context {
  int n = 0, k = 0, s = 0, q = 0;
  SearchMode mode = SearchMode::MStar;
  std::vector<std::uint64_t> edges;            // colex order
  std::vector<std::vector<std::uint32_t>> up;  // immediate successors under the shifting order
  std::uint32_t forced = 0;                    // edges [0, forced) form C([q],k)
};

struct Shared {
  std::atomic<long long> best{0};
  std::mutex mu;
  std::vector<Edge> witness;
  bool have_witness = false;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
  std::uint64_t node_limit = 0;
  std::uint64_t batch = 4096;  // nodes counted locally between budget checks
  Clock::time_point deadline;

  void offer(const std::vector<Edge>& members) {
    const long long size = static_cast<long long>(members.size());
    std::lock_guard lock(mu);
    if (size <= best.load()) return;
    witness = members;
    have_witness = true;
    best.store(size);
  }
};

class Searcher {
 public:
  Searcher(const Context& ctx, Shared& shared) : ctx_(&ctx), sh_(&shared) {}

  // Sets up the root: C([q],k) included, and in M_STAR mode the edge
  // {q-k+2, ..., q+1} with its up-set excluded. Returns false if the root
  // already violates nu <= s.
  bool init_root() {
    const std::size_t total = ctx_->edges.size();
    status_.assign(total, kFree);
    members_.clear();
    for (std::uint32_t i = 0; i < ctx_->forced; ++i) {
      status_[i] = kIn;
      members_.push_back(Edge::from_mask(ctx_->edges[i]));
    }
    MatchingResult m = matching_number(make_family_unchecked(ctx_->n, ctx_->k, members_));
    if (m.nu > ctx_->s) return false;
    matching_.clear();
    for (Edge e : m.witness) matching_.push_back(e.mask());
    free_after_ = static_cast<long long>(total - ctx_->forced);
    pos_ = ctx_->forced;
    if (ctx_->mode == SearchMode::MStar && ctx_->q + 1 <= ctx_->n) {
      const std::uint64_t above = (ground_mask(ctx_->q + 1) >> (ctx_->q - ctx_->k + 1)) << (ctx_->q - ctx_->k + 1);
      const auto it = std::lower_bound(ctx_->edges.begin(), ctx_->edges.end(), above);
      exclude(static_cast<std::uint32_t>(it - ctx_->edges.begin()));
    }
    trail_.clear();
    return true;
  }

  void run() { dfs(pos_, -1); }

  // Explores the first `depth` branching levels and stores the open subtrees.
  void split(int depth, std::vector<Searcher>& tasks) {
    tasks_ = &tasks;
    dfs(pos_, depth);
    tasks_ = nullptr;
  }

  void flush_nodes() {
    sh_->nodes.fetch_add(local_nodes_);
    local_nodes_ = 0;
  }

 private:
  bool budget_ok() {
    if (sh_->aborted.load(std::memory_order_relaxed)) return false;
    if (++local_nodes_ >= sh_->batch) {
      const std::uint64_t total = sh_->nodes.fetch_add(local_nodes_) + local_nodes_;
      local_nodes_ = 0;
      if (total >= sh_->node_limit || Clock::now() >= sh_->deadline) {
        sh_->aborted.store(true);
        return false;
      }
    }
    return true;
  }

  // Marks edge `idx` and every free edge above it Out.
  void exclude(std::uint32_t idx) {
    status_[idx] = kOut;
    trail_.push_back(idx);
    --free_after_;
    for (std::size_t head = trail_.size() - 1; head < trail_.size(); ++head) {
      for (std::uint32_t j : ctx_->up[trail_[head]]) {
        if (status_[j] != kFree) continue;
        status_[j] = kOut;
        trail_.push_back(j);
        --free_after_;
      }
    }
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      status_[trail_.back()] = kFree;
      trail_.pop_back();
      ++free_after_;
    }
  }

  // Matching of members + e, given that members has maximum matching matching_.
  bool extended_matching(std::uint64_t e, std::vector<std::uint64_t>& out) {
    std::uint64_t used = 0;
    for (auto m : matching_) used |= m;
    out = matching_;
    if ((used & e) == 0) {
      out.push_back(e);
      return true;
    }
    // A larger matching must use e, so it pairs e with nu members avoiding e.
    std::vector<Edge> found;
    if (!has_disjoint_edges(members_, static_cast<int>(matching_.size()), Edge::from_mask(e), &found)) return false;
    out.clear();
    for (Edge f : found) out.push_back(f.mask());
    out.push_back(e);
    return true;
  }

  void dfs(std::uint32_t pos, int split_depth) {
    if (!budget_ok()) return;
    const std::uint32_t total = static_cast<std::uint32_t>(ctx_->edges.size());
    while (pos < total && status_[pos] != kFree) ++pos;
    const long long size = static_cast<long long>(members_.size());
    if (size + free_after_ <= sh_->best.load(std::memory_order_relaxed)) return;
    if (pos == total) {
      if (ctx_->mode == SearchMode::MStar && static_cast<int>(matching_.size()) != ctx_->s) return;
      sh_->offer(members_);
      return;
    }
    if (split_depth == 0) {
      Searcher task = *this;
      task.pos_ = pos;
      task.trail_.clear();
      task.tasks_ = nullptr;
      task.local_nodes_ = 0;
      tasks_->push_back(std::move(task));
      return;
    }
    const int next_depth = split_depth < 0 ? -1 : split_depth - 1;
    const std::uint64_t e = ctx_->edges[pos];

    std::vector<std::uint64_t> grown;
    const bool raises = extended_matching(e, grown);
    const bool includable = !raises || static_cast<int>(grown.size()) <= ctx_->s;
    if (includable) {
      status_[pos] = kIn;
      --free_after_;
      members_.push_back(Edge::from_mask(e));
      if (raises) std::swap(matching_, grown);
      dfs(pos + 1, next_depth);
      if (raises) std::swap(matching_, grown);
      members_.pop_back();
      ++free_after_;
      status_[pos] = kFree;
    }
    const std::size_t mark = trail_.size();
    exclude(pos);
    dfs(pos + 1, next_depth);
    undo_to(mark);
  }

  const Context* ctx_;
  Shared* sh_;
  std::vector<std::uint8_t> status_;
  std::vector<Edge> members_;  // colex order
  std::vector<std::uint64_t> matching_;
  std::vector<std::uint32_t> trail_;
  long long free_after_ = 0;
  std::uint32_t pos_ = 0;
  std::uint64_t local_nodes_ = 0;
  std::vector<Searcher>* tasks_ = nullptr;
};

void validate(const SearchProblem& p) {
  check_ground_size(p.n);
  if (p.k < 1) throw ArgumentError("oracle requires k >= 1, got k=" + std::to_string(p.k));
  if (p.s < 1) throw ArgumentError("oracle requires s >= 1, got s=" + std::to_string(p.s));
  if (p.q < p.k)
    throw ArgumentError("oracle requires q >= k, got q=" + std::to_string(p.q) + " k=" + std::to_string(p.k));
  if (p.threads < 1) throw ArgumentError("oracle requires threads >= 1");
}

bool satisfies(const Family& f, SearchMode mode, int q, int s) {
  if (!is_shifted(f)) return false;
  const int nu = matching_number(f).nu;
  const int omega = clique_number(f).omega;
  if (mode == SearchMode::MStar) return nu == s && omega == q;
  return nu <= s && omega >= q;
}

// Best verified construction meeting the mode's constraints.
std::optional<Family> seed_family(const SearchProblem& p) {
  std::optional<Family> best;
  auto consider = [&](auto&& make) {
    try {
      Family f = make();
      if (satisfies(f, p.mode, p.q, p.s) && (!best || f.size() > best->size())) best = std::move(f);
    } catch (const std::exception&) {
    }
  };
  const int top = p.mode == SearchMode::MStar ? p.q : std::min(p.n, (p.s + 1) * p.k - 1);
  for (int t = p.q; t <= top; ++t) {
    consider([&] { return clique_family(p.n, t, p.k); });
    if (p.k >= 2 && t >= p.s + p.k - 1 && t <= p.s * p.k + p.k - 1)
      consider([&] { return clique_matching_family(p.n, t, p.k, p.s); });
  }
  return best;
}

SearchResult search(const SearchProblem& p) {
  validate(p);
  SearchResult result;
  result.witness = Family(p.n, p.k);
  result.proven_optimal = true;
  if (p.q > p.n) return result;
  if (p.mode == SearchMode::M && p.q >= (p.s + 1) * p.k) return result;

  const std::uint64_t total = binomial_u64(p.n, p.k);
  if (total > kMaxSearchEdges)
    throw CapacityError("oracle instance has " + std::to_string(total) + " candidate edges; the limit is " +
                        std::to_string(kMaxSearchEdges));

  Context ctx;
  ctx.n = p.n;
  ctx.k = p.k;
  ctx.s = p.s;
  ctx.q = p.q;
  ctx.mode = p.mode;
  ctx.edges.reserve(total);
  for_each_subset_of_size(VertexSet::from_mask(ground_mask(p.n)), p.k,
                          [&](Edge e) { ctx.edges.push_back(e.mask()); });
  const ColexRanker ranker(p.n);
  ctx.up.resize(ctx.edges.size());
  for (std::size_t i = 0; i < ctx.edges.size(); ++i) {
    const std::uint64_t e = ctx.edges[i];
    for (std::uint64_t rest = e; rest != 0; rest &= rest - 1) {
      const int b = std::countr_zero(rest);
      if (b + 1 >= p.n || (e >> (b + 1)) & 1) continue;
      const std::uint64_t f = (e & ~(std::uint64_t{1} << b)) | (std::uint64_t{1} << (b + 1));
      ctx.up[i].push_back(static_cast<std::uint32_t>(ranker.rank(f)));
    }
  }
  ctx.forced = static_cast<std::uint32_t>(binomial_u64(p.q, p.k));

  Shared shared;
  shared.node_limit = p.budget.node_limit;
  shared.batch = std::clamp<std::uint64_t>(p.budget.node_limit / 64, 1, 4096);
  shared.deadline = Clock::now() + p.budget.time_limit;
  if (auto seed = seed_family(p)) {
    shared.offer(std::vector<Edge>(seed->begin(), seed->end()));
  }

  Searcher root(ctx, shared);
  if (root.init_root()) {
    if (p.threads == 1) {
      root.run();
      root.flush_nodes();
    } else {
      std::vector<Searcher> tasks;
      int depth = 0;
      while ((1 << depth) < 8 * p.threads && depth < 20) ++depth;
      root.split(depth, tasks);
      root.flush_nodes();
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> workers;
      for (int w = 0; w < p.threads; ++w) {
        workers.emplace_back([&] {
          for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
            tasks[i].run();
            tasks[i].flush_nodes();
          }
        });
      }
      for (auto& t : workers) t.join();
    }
  }

  result.nodes_explored = shared.nodes.load();
  result.proven_optimal = !shared.aborted.load();
  if (shared.have_witness) {
    result.witness = Family(p.n, p.k, shared.witness);
    result.value = static_cast<long long>(result.witness.size());
    if (!satisfies(result.witness, p.mode, p.q, p.s))
      throw std::logic_error("oracle witness fails the search constraints: " + result.witness.to_string());
  }
  return result;
}

}  // namespace

SearchResult exact_m_star(const SearchProblem& problem) {
  SearchProblem p = problem;
  p.mode = SearchMode::MStar;
  return search(p);
}

SearchResult exact_m(const SearchProblem& problem) {
  SearchProblem p = problem;
  p.mode = SearchMode::M;
  return search(p);
}

SearchResult exact_m_via_stars(const SearchProblem& problem) {
  validate(problem);
  const int top = (problem.s + 1) * problem.k - 1;
  if (problem.n < top + 1)
    throw ArgumentError("m via m* requires n >= (s+1)k = " + std::to_string(top + 1) + ", got n=" +
                        std::to_string(problem.n));
  SearchResult best;
  best.witness = Family(problem.n, problem.k);
  best.proven_optimal = true;
  const auto start = Clock::now();
  for (int t = problem.q; t <= top; ++t) {
    SearchProblem p = problem;
    p.q = t;
    p.mode = SearchMode::MStar;
    p.budget.node_limit = problem.budget.node_limit > best.nodes_explored
                              ? problem.budget.node_limit - best.nodes_explored
                              : 0;
    p.budget.time_limit = problem.budget.time_limit -
                          std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    SearchResult r = search(p);
    best.nodes_explored += r.nodes_explored;
    best.proven_optimal = best.proven_optimal && r.proven_optimal;
    if (r.value > best.value) {
      best.value = r.value;
      best.witness = std::move(r.witness);
    }
  }
  return best;
}

Trichotomy trichotomy_branches(const Family& f, int s) {
  const int k = f.k();
  Trichotomy t;
  const VertexSet head = VertexSet::interval(1, s);
  t.inside_star = std::all_of(f.begin(), f.end(), [&](Edge e) { return e.meets(head); });
  const int omega = clique_number(f).omega;
  t.mid_clique = s + k <= omega && omega < s * k + k - 1;
  t.full_clique = s * k + k - 1 <= f.n() && f == clique_family(f.n(), s * k + k - 1, k);
  return t;
}

std::string_view identity_name(Identity id) {
  switch (id) {
    case Identity::Recursion: return "recursion";
    case Identity::Monotonicity: return "monotonicity";
    case Identity::StarMax: return "star-max";
    case Identity::Trichotomy: return "trichotomy";
  }
  return "?";
}

Identity parse_identity(std::string_view name) {
  for (auto id : {Identity::Recursion, Identity::Monotonicity, Identity::StarMax, Identity::Trichotomy})
    if (identity_name(id) == name) return id;
  throw ArgumentError("unknown identity '" + std::string(name) +
                      "' (expected recursion, monotonicity, star-max, trichotomy)");
}

namespace {

SearchProblem problem_of(const IdentityParams& p, int n, int q, int s) {
  SearchProblem out;
  out.n = n;
  out.q = q;
  out.k = p.k;
  out.s = s;
  out.budget = p.budget;
  return out;
}

IdentityReport check_recursion(const IdentityParams& p) {
  IdentityReport r;
  r.identity = Identity::Recursion;
  if (p.s < 2 || p.n < 2 || p.q < p.k + 1)
    throw ArgumentError("recursion check requires s >= 2, n >= 2 and q >= k+1");
  const SearchResult big = exact_m_star(problem_of(p, p.n, p.q, p.s));
  const SearchResult small = exact_m_star(problem_of(p, p.n - 1, p.q - 1, p.s - 1));
  r.checks = 1;
  r.lhs = big.value;
  r.rhs = binom(p.n - 1, p.k - 1).convert_to<long long>() + small.value;
  if (!big.proven_optimal || !small.proven_optimal) {
    r.inconclusive = true;
    r.detail = "budget exhausted";
    return r;
  }
  // Reducible: the members avoiding vertex 1 already have matching number s-1.
  const Family rest = restrict_avoid(big.witness, VertexSet::of({1}));
  const bool reducible = !big.witness.empty() && matching_number(rest).nu == p.s - 1;
  r.holds = r.lhs >= r.rhs && (!reducible || r.lhs == r.rhs);
  r.detail = std::string(reducible ? "witness reducible" : "witness not reducible") + ", lhs " +
             (r.lhs > r.rhs ? ">" : r.lhs == r.rhs ? "=" : "<") + " rhs";
  if (!r.holds) {
    ++r.violations;
    r.counterexample = big.witness;
  }
  return r;
}

IdentityReport check_monotonicity(const IdentityParams& p) {
  IdentityReport r;
  r.identity = Identity::Monotonicity;
  for (int k = 1; k <= p.k_max; ++k)
    for (int s = 1; s <= p.s_max; ++s)
      for (int q = s + k - 1; q <= s * k + k - 2; ++q)
        for (int n = 2 * q; n <= p.n_max; ++n) {
          ++r.checks;
          const BigInt a = size_A(n, q, k, s), b = size_A(n, q + 1, k, s);
          if (a < b) {
            if (r.violations++ == 0)
              r.detail = "size_A(" + std::to_string(n) + "," + std::to_string(q) + "," + std::to_string(k) + "," +
                         std::to_string(s) + ") = " + to_string(a) + " < " + to_string(b);
          }
        }
  r.holds = r.violations == 0;
  if (r.holds) r.detail = std::to_string(r.checks) + " cells, no violation";
  return r;
}

IdentityReport check_star_max(const IdentityParams& p) {
  IdentityReport r;
  r.identity = Identity::StarMax;
  const SearchResult direct = exact_m(problem_of(p, p.n, p.q, p.s));
  const SearchResult stars = exact_m_via_stars(problem_of(p, p.n, p.q, p.s));
  r.checks = 1;
  r.lhs = direct.value;
  r.rhs = stars.value;
  if (!direct.proven_optimal || !stars.proven_optimal) {
    r.inconclusive = true;
    r.detail = "budget exhausted";
    return r;
  }
  r.holds = r.lhs == r.rhs;
  r.detail = "direct " + std::to_string(r.lhs) + ", via m* " + std::to_string(r.rhs);
  if (!r.holds) {
    r.violations = 1;
    r.counterexample = direct.value > stars.value ? direct.witness : stars.witness;
  }
  return r;
}

IdentityReport check_trichotomy(const IdentityParams& p) {
  IdentityReport r;
  r.identity = Identity::Trichotomy;
  if (p.k_max < 2 || p.n_max < 3) throw ArgumentError("trichotomy check requires k_max >= 2 and n_max >= 3");
  Rng rng(p.seed);
  for (int i = 0; i < p.samples; ++i) {
    const int k = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(p.k_max - 1)));
    const int n_lo = k + 1;
    if (n_lo > p.n_max) continue;
    const int n = n_lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(p.n_max - n_lo + 1)));
    const int s = 1 + static_cast<int>(uniform_below(rng, 3));
    const std::uint64_t target = uniform_below(rng, binomial_u64(n, k) + 1);
    const Family f = shift_closure(random_family_with_matching_at_most(rng, n, k, s, target));
    ++r.checks;
    const Trichotomy t = trichotomy_branches(f, s);
    if (t.inside_star + t.mid_clique + t.full_clique != 1) {
      if (r.violations++ == 0) {
        r.counterexample = f;
        r.detail = "s=" + std::to_string(s) + " family " + f.to_string();
      }
    }
  }
  r.holds = r.violations == 0;
  if (r.holds) r.detail = std::to_string(r.checks) + " shifted samples, exactly one branch each";
  return r;
}

}  // namespace

IdentityReport verify_identity(Identity identity, const IdentityParams& params) {
  switch (identity) {
    case Identity::Recursion: return check_recursion(params);
    case Identity::Monotonicity: return check_monotonicity(params);
    case Identity::StarMax: return check_star_max(params);
    case Identity::Trichotomy: return check_trichotomy(params);
  }
  throw ArgumentError("unknown identity");
}

}  // namespace extremal
