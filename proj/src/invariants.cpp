#include "extremal/invariants.hpp"

#include <algorithm>
#include <unordered_set>

#include "extremal/errors.hpp"

namespace extremal {
namespace {

// Upper bound on the number of disjoint edges among cand[from..]: limited by
// the count of edges, by |union| / k, and by the number of distinct minimum
// vertices (disjoint edges have distinct minima).
int packing_bound(const std::vector<Edge>& cand, std::size_t from, int k) {
  std::uint64_t uni = 0;
  std::uint64_t minima = 0;
  for (std::size_t i = from; i < cand.size(); ++i) {
    const std::uint64_t m = cand[i].mask();
    uni |= m;
    minima |= m & (~m + 1);
  }
  const int by_count = static_cast<int>(cand.size() - from);
  return std::min({by_count, std::popcount(uni) / k, std::popcount(minima)});
}

// Branch and bound for set packing. Branches on the least remaining edge in
// colex order: take it (include-first) or drop it.
class PackingSearch {
 public:
  PackingSearch(int k, int target) : k_(k), target_(target) {}

  void seed(std::vector<Edge> initial) {
    best_ = static_cast<int>(initial.size());
    best_witness_ = std::move(initial);
  }

  void run(const std::vector<Edge>& cand) { dfs(cand, 0); }

  int best() const { return best_; }
  std::vector<Edge>& best_witness() { return best_witness_; }

 private:
  bool done() const { return target_ > 0 && best_ >= target_; }

  void dfs(const std::vector<Edge>& cand, std::size_t from) {
    const int depth = static_cast<int>(current_.size());
    if (depth > best_) {
      best_ = depth;
      best_witness_ = current_;
    }
    if (done() || from >= cand.size()) return;
    if (depth + packing_bound(cand, from, k_) <= best_) return;

    const Edge e = cand[from];
    std::vector<Edge> next;
    next.reserve(cand.size() - from);
    for (std::size_t i = from + 1; i < cand.size(); ++i)
      if (!cand[i].meets(e)) next.push_back(cand[i]);
    current_.push_back(e);
    dfs(next, 0);
    current_.pop_back();
    if (done()) return;
    dfs(cand, from + 1);
  }

  int k_;
  int target_;  // stop once a packing of this size is found; 0 = maximize
  int best_ = 0;
  std::vector<Edge> best_witness_;
  std::vector<Edge> current_;
};

std::vector<Edge> greedy_packing(std::span<const Edge> edges) {
  std::vector<Edge> out;
  std::uint64_t used = 0;
  for (Edge e : edges) {
    if ((e.mask() & used) == 0) {
      out.push_back(e);
      used |= e.mask();
    }
  }
  return out;
}

class CoverSearch {
 public:
  explicit CoverSearch(std::span<const Edge> edges) : edges_(edges) {
    // Every vertex of a maximal packing: a cover of size at most k * nu.
    std::uint64_t m = 0;
    for (Edge e : greedy_packing(edges)) m |= e.mask();
    best_ = VertexSet::from_mask(m);
  }

  VertexSet run() {
    dfs(VertexSet{}, VertexSet{});
    return best_;
  }

 private:
  void dfs(VertexSet cover, VertexSet forbidden) {
    const Edge* first = nullptr;
    std::uint64_t used = 0;
    int lower = 0;
    for (const Edge& e : edges_) {
      if (e.meets(cover)) continue;
      if (e.subset_of(forbidden)) return;  // cannot be covered in this subtree
      if (first == nullptr) first = &e;
      if ((e.mask() & used) == 0) {
        used |= e.mask();
        ++lower;
      }
    }
    if (first == nullptr) {
      if (cover.size() < best_.size()) best_ = cover;
      return;
    }
    if (cover.size() + lower >= best_.size()) return;
    // Branch on each vertex of the first uncovered edge; earlier choices are
    // forbidden in later branches so each cover is explored once.
    VertexSet tried = forbidden;
    for (int v : (*first - forbidden).vertices()) {
      dfs(cover.with(v), tried);
      tried = tried.with(v);
    }
  }

  std::span<const Edge> edges_;
  VertexSet best_;
};

template <typename Pred>
bool all_subsets_of_size(VertexSet ground, int r, Pred&& pred) {
  const int m = ground.size();
  if (r < 0 || r > m) return true;
  if (r == 0) return pred(VertexSet{});
  int pos[kMaxVertices];
  int idx = 0;
  for (std::uint64_t g = ground.mask(); g != 0; g &= g - 1) pos[idx++] = std::countr_zero(g);
  std::uint64_t sel = (std::uint64_t{1} << r) - 1;
  const std::uint64_t limit = ground_mask(m);
  while (sel != 0 && (sel & ~limit) == 0) {
    std::uint64_t out = 0;
    for (std::uint64_t s = sel; s != 0; s &= s - 1) out |= std::uint64_t{1} << pos[std::countr_zero(s)];
    if (!pred(VertexSet::from_mask(out))) return false;
    sel = next_same_popcount(sel);
  }
  return true;
}

}  // namespace

MatchingResult matching_number(const Family& f) {
  if (f.empty()) return {};
  if (f.k() == 0) return {1, {f[0]}};
  PackingSearch search(f.k(), 0);
  std::vector<Edge> cand(f.begin(), f.end());
  search.seed(greedy_packing(cand));
  search.run(cand);
  return {search.best(), std::move(search.best_witness())};
}

bool has_disjoint_edges(std::span<const Edge> edges, int count, VertexSet avoid, std::vector<Edge>* found) {
  if (count <= 0) {
    if (found) found->clear();
    return true;
  }
  std::vector<Edge> cand;
  cand.reserve(edges.size());
  int k = 0;
  for (Edge e : edges) {
    if (e.meets(avoid)) continue;
    cand.push_back(e);
    k = e.size();
  }
  if (static_cast<int>(cand.size()) < count) return false;
  if (k == 0) {
    // Only the empty edge; it is disjoint from itself only once.
    if (count > 1) return false;
    if (found) *found = {cand[0]};
    return true;
  }
  auto greedy = greedy_packing(cand);
  if (static_cast<int>(greedy.size()) >= count) {
    greedy.resize(static_cast<std::size_t>(count));
    if (found) *found = std::move(greedy);
    return true;
  }
  PackingSearch search(k, count);
  search.seed(std::move(greedy));
  search.run(cand);
  if (search.best() < count) return false;
  if (found) {
    *found = std::move(search.best_witness());
    found->resize(static_cast<std::size_t>(count));
  }
  return true;
}

CoverResult covering_number(const Family& f) {
  if (f.empty()) return {};
  if (f.k() == 0) throw ArgumentError("the empty edge cannot be covered");
  CoverSearch search(f.edges());
  VertexSet cover = search.run();
  return {cover.size(), cover};
}

CliqueResult clique_number(const Family& f) {
  const int n = f.n();
  const int k = f.k();
  if (f.empty()) {
    const int w = std::max(0, k - 1);
    return {w, VertexSet::interval(1, std::min(w, n))};
  }
  if (k == 0) return {n, f.ground()};

  std::unordered_set<std::uint64_t> members;
  members.reserve(f.size() * 2);
  for (Edge e : f) members.insert(e.mask());

  std::vector<VertexSet> frontier(f.begin(), f.end());
  CliqueResult best{k, frontier.front()};
  while (!frontier.empty()) {
    std::vector<VertexSet> next;
    for (VertexSet c : frontier) {
      for (int v = c.max() + 1; v <= n; ++v) {
        const std::uint64_t bit = std::uint64_t{1} << (v - 1);
        const bool ok = all_subsets_of_size(c, k - 1, [&](VertexSet s) {
          return members.count(s.mask() | bit) != 0;
        });
        if (ok) next.push_back(c.with(v));
      }
    }
    if (next.empty()) break;
    best = {best.omega + 1, next.front()};
    frontier = std::move(next);
  }
  return best;
}

InvariantReport invariants(const Family& f) {
  InvariantReport r;
  auto m = matching_number(f);
  r.nu = m.nu;
  r.matching_witness = std::move(m.witness);
  auto c = covering_number(f);
  r.tau = c.tau;
  r.cover_witness = c.witness;
  auto q = clique_number(f);
  r.omega = q.omega;
  r.clique_witness = q.witness;
  return r;
}

bool is_intersecting(const Family& f) { return is_t_intersecting(f, 1); }

bool is_t_intersecting(const Family& f, int t) {
  if (t < 0) throw ArgumentError("t must be nonnegative");
  const auto edges = f.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if ((edges[i] & edges[j]).size() < t) return false;
  return true;
}

bool are_cross_intersecting(const Family& f, const Family& g) {
  if (f.n() != g.n()) throw ArgumentError("families live on different ground sets");
  for (Edge a : f)
    for (Edge b : g)
      if (!a.meets(b)) return false;
  return true;
}

IntersectionReport intersection_predicates(const Family& f, const Family& g, int t) {
  if (f.n() != g.n())
    throw ArgumentError("families live on different ground sets: n=" + std::to_string(f.n()) +
                        " and n=" + std::to_string(g.n()));
  if (t < 0) throw ArgumentError("t must be nonnegative");
  return {is_intersecting(f), is_t_intersecting(f, t), are_cross_intersecting(f, g)};
}

}  // namespace extremal
