#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "extremal/vertex_set.hpp"

namespace extremal {

/// A k-uniform family over the ground set [n]: a duplicate-free set of
/// k-subsets, held in colexicographic order. Immutable once built.
class Family {
 public:
  Family() = default;

  /// Empty family. Throws CapacityError when n > 64, ArgumentError when
  /// k < 0 or n < 0.
  Family(int n, int k);

  /// Family with the given edges. Duplicates are merged (set semantics);
  /// an edge outside [n] or of size other than k raises ArgumentError.
  Family(int n, int k, std::vector<Edge> edges);

  /// Builds a family from 1-based vertex lists.
  static Family from_lists(int n, int k, const std::vector<std::vector<int>>& lists);

  /// Every k-subset of [n].
  static Family complete(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  VertexSet ground() const { return VertexSet::from_mask(ground_mask(n_)); }

  std::span<const Edge> edges() const { return edges_; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }
  const Edge& operator[](std::size_t i) const { return edges_[i]; }

  bool contains(Edge e) const;
  /// True when every edge of this family is in `other` (same n, k required).
  bool subset_of(const Family& other) const;

  /// Union of all edges.
  VertexSet support() const;

  std::vector<std::vector<int>> to_lists() const;
  std::string to_string() const;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  struct Trusted {};
  Family(int n, int k, std::vector<Edge> sorted_unique, Trusted)
      : n_(n), k_(k), edges_(std::move(sorted_unique)) {}

  friend Family make_family_unchecked(int n, int k, std::vector<Edge> sorted_unique);

  int n_ = 0;
  int k_ = 0;
  std::vector<Edge> edges_;
};

/// Builds a family from edges already known to be valid, sorted and unique.
/// Internal fast path for operators that preserve those properties.
Family make_family_unchecked(int n, int k, std::vector<Edge> sorted_unique);

/// Throws CapacityError if n is outside the supported range.
void check_ground_size(int n);

}  // namespace extremal
