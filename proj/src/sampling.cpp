#include "extremal/sampling.hpp"

#include <algorithm>

#include "extremal/errors.hpp"
#include "extremal/invariants.hpp"
#include "extremal/operators.hpp"

namespace extremal {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw ArgumentError("uniform_below requires a positive bound");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Edge random_k_subset(Rng& rng, int n, int k) {
  check_ground_size(n);
  if (k < 0 || k > n) throw ArgumentError("random_k_subset requires 0 <= k <= n");
  int pool[kMaxVertices];
  for (int i = 0; i < n; ++i) pool[i] = i;
  std::uint64_t mask = 0;
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - i)));
    std::swap(pool[i], pool[j]);
    mask |= std::uint64_t{1} << pool[i];
  }
  return Edge::from_mask(mask);
}

Family random_family(Rng& rng, int n, int k, std::uint64_t m) {
  const std::uint64_t total = binomial_u64(n, k);
  m = std::min(m, total);
  std::vector<Edge> edges;
  if (2 * m > total) {
    // Dense request: shuffle the complete family and take a prefix.
    Family all = Family::complete(n, k);
    edges.assign(all.begin(), all.end());
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, edges.size() - i));
      std::swap(edges[i], edges[j]);
    }
    edges.resize(m);
    return Family(n, k, std::move(edges));
  }
  while (edges.size() < m) {
    Edge e = random_k_subset(rng, n, k);
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  }
  return Family(n, k, std::move(edges));
}

Family random_family_with_matching_at_most(Rng& rng, int n, int k, int s, std::uint64_t target) {
  Family all = Family::complete(n, k);
  std::vector<Edge> order(all.begin(), all.end());
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, order.size() - i));
    std::swap(order[i], order[j]);
  }
  std::vector<Edge> kept;
  for (Edge e : order) {
    if (kept.size() >= target) break;
    if (!has_disjoint_edges(kept, s, e)) kept.push_back(e);
  }
  return Family(n, k, std::move(kept));
}

}  // namespace extremal
