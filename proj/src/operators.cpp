#include "extremal/operators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "extremal/errors.hpp"

namespace extremal {

std::uint64_t binomial_u64(int a, int b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  std::uint64_t r = 1;
  for (int i = 1; i <= b; ++i) {
    // r * num / i is exact; i / gcd(num, i) divides r.
    std::uint64_t num = static_cast<std::uint64_t>(a - b + i), den = static_cast<std::uint64_t>(i);
    const std::uint64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (__builtin_mul_overflow(r / den, num, &r))
      throw CapacityError("C(" + std::to_string(a) + "," + std::to_string(b) + ") overflows 64 bits");
  }
  return r;
}

Family shadow(const Family& f, int steps) {
  if (steps < 0 || steps >= f.k())
    throw ArgumentError("shadow steps must satisfy 0 <= steps < k, got steps=" + std::to_string(steps) +
                        " k=" + std::to_string(f.k()));
  if (steps == 0) return f;
  std::vector<Edge> cur(f.begin(), f.end());
  for (int step = 0; step < steps; ++step) {
    std::vector<Edge> next;
    next.reserve(cur.size() * static_cast<std::size_t>(f.k()));
    for (Edge e : cur)
      for (std::uint64_t m = e.mask(); m != 0; m &= m - 1)
        next.push_back(Edge::from_mask(e.mask() & ~(m & (~m + 1))));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
  }
  return make_family_unchecked(f.n(), f.k() - steps, std::move(cur));
}

Family lex_family(int n, int k, std::uint64_t m) {
  check_ground_size(n);
  if (k < 0 || k > n) throw ArgumentError("lex_family requires 0 <= k <= n");
  const std::uint64_t total = binomial_u64(n, k);
  if (m > total)
    throw ArgumentError("lex_family: m=" + std::to_string(m) + " exceeds C(n,k)=" + std::to_string(total));
  std::vector<Edge> out;
  out.reserve(m);
  // Increasing tuples in lexicographic order.
  std::vector<int> a(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) a[static_cast<std::size_t>(i)] = i + 1;
  for (std::uint64_t c = 0; c < m; ++c) {
    out.push_back(VertexSet::of(a));
    int i = k - 1;
    while (i >= 0 && a[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++a[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) a[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::sort(out.begin(), out.end());
  return make_family_unchecked(n, k, std::move(out));
}

Family colex_family(int n, int k, std::uint64_t m) {
  check_ground_size(n);
  if (k < 0 || k > n) throw ArgumentError("colex_family requires 0 <= k <= n");
  const std::uint64_t total = binomial_u64(n, k);
  if (m > total)
    throw ArgumentError("colex_family: m=" + std::to_string(m) + " exceeds C(n,k)=" + std::to_string(total));
  std::vector<Edge> out;
  out.reserve(m);
  std::uint64_t mask = ground_mask(k);
  for (std::uint64_t c = 0; c < m; ++c) {
    out.push_back(Edge::from_mask(mask));
    if (mask == 0) break;
    mask = next_same_popcount(mask);
  }
  return make_family_unchecked(n, k, std::move(out));
}

Family link(const Family& f, VertexSet v) {
  if (v.size() > f.k()) return Family(f.n(), 0);
  std::vector<Edge> out;
  for (Edge e : f)
    if (v.subset_of(e)) out.push_back(e - v);
  std::sort(out.begin(), out.end());
  return make_family_unchecked(f.n(), f.k() - v.size(), std::move(out));
}

Family restrict_avoid(const Family& f, VertexSet v) {
  std::vector<Edge> out;
  for (Edge e : f)
    if (!e.meets(v)) out.push_back(e);
  return make_family_unchecked(f.n(), f.k(), std::move(out));
}

Family link_within(const Family& f, VertexSet v, VertexSet q) {
  if (v.size() > f.k()) return Family(f.n(), 0);
  std::vector<Edge> out;
  for (Edge e : f)
    if (v.subset_of(e) && (e - v).subset_of(q)) out.push_back(e - v);
  std::sort(out.begin(), out.end());
  return make_family_unchecked(f.n(), f.k() - v.size(), std::move(out));
}

}  // namespace extremal
