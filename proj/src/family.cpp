#include "extremal/family.hpp"

#include <algorithm>

#include "extremal/errors.hpp"

namespace extremal {

void check_ground_size(int n) {
  if (n < 0) throw ArgumentError("ground set size must be nonnegative, got " + std::to_string(n));
  if (n > kMaxVertices)
    throw CapacityError("ground set size " + std::to_string(n) + " exceeds the supported maximum of 64");
}

Family::Family(int n, int k) : n_(n), k_(k) {
  check_ground_size(n);
  if (k < 0) throw ArgumentError("uniformity k must be nonnegative, got " + std::to_string(k));
}

Family::Family(int n, int k, std::vector<Edge> edges) : Family(n, k) {
  const std::uint64_t g = ground_mask(n);
  for (Edge e : edges) {
    if ((e.mask() & ~g) != 0)
      throw ArgumentError("edge " + e.to_string() + " is not contained in [" + std::to_string(n) + "]");
    if (e.size() != k)
      throw ArgumentError("edge " + e.to_string() + " has size " + std::to_string(e.size()) +
                          ", expected " + std::to_string(k));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

Family Family::from_lists(int n, int k, const std::vector<std::vector<int>>& lists) {
  check_ground_size(n);
  std::vector<Edge> edges;
  edges.reserve(lists.size());
  for (const auto& l : lists) {
    for (int v : l)
      if (v < 1 || v > n)
        throw ArgumentError("vertex " + std::to_string(v) + " is outside [1, " + std::to_string(n) + "]");
    Edge e = VertexSet::of(l);
    if (e.size() != static_cast<int>(l.size())) throw ArgumentError("edge lists a vertex twice");
    edges.push_back(e);
  }
  return Family(n, k, std::move(edges));
}

Family Family::complete(int n, int k) {
  Family f(n, k);
  for_each_subset_of_size(f.ground(), k, [&](VertexSet e) { f.edges_.push_back(e); });
  return f;
}

bool Family::contains(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

bool Family::subset_of(const Family& other) const {
  return std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(), edges_.end());
}

VertexSet Family::support() const {
  std::uint64_t m = 0;
  for (Edge e : edges_) m |= e.mask();
  return VertexSet::from_mask(m);
}

std::vector<std::vector<int>> Family::to_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(edges_.size());
  for (Edge e : edges_) out.push_back(e.vertices());
  return out;
}

std::string Family::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) s += ", ";
    s += edges_[i].to_string();
  }
  return s + "}";
}

Family make_family_unchecked(int n, int k, std::vector<Edge> sorted_unique) {
  return Family(n, k, std::move(sorted_unique), Family::Trusted{});
}

}  // namespace extremal
