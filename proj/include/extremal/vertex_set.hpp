#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace extremal {

/// Largest supported ground set: one machine word per vertex set.
inline constexpr int kMaxVertices = 64;

/// A subset of the ground set [n] = {1, ..., n}, stored as a bitmask with
/// vertex v at bit v-1. Ordering is colexicographic: for sets of equal size
/// A < B iff max(A xor B) lies in B, which is numeric order on the masks.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static constexpr VertexSet from_mask(std::uint64_t mask) { return VertexSet(mask); }

  /// Builds a set from 1-based vertices; throws on vertices outside [1, 64].
  static VertexSet of(std::span<const int> vertices);
  static VertexSet of(std::initializer_list<int> vertices) {
    return of(std::span<const int>(vertices.begin(), vertices.size()));
  }

  /// The interval [first, last] (1-based, inclusive); empty when first > last.
  static VertexSet interval(int first, int last);

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }

  constexpr bool contains(int v) const {
    return v >= 1 && v <= kMaxVertices && ((mask_ >> (v - 1)) & 1U) != 0;
  }
  /// Smallest vertex; 0 for the empty set.
  constexpr int min() const { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }
  /// Largest vertex; 0 for the empty set.
  constexpr int max() const { return mask_ == 0 ? 0 : kMaxVertices - std::countl_zero(mask_); }

  constexpr bool meets(VertexSet other) const { return (mask_ & other.mask_) != 0; }
  constexpr bool subset_of(VertexSet other) const { return (mask_ & ~other.mask_) == 0; }

  VertexSet with(int v) const;
  VertexSet without(int v) const;

  /// Sorted 1-based vertex list.
  std::vector<int> vertices() const;
  std::string to_string() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.mask_ | b.mask_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & b.mask_); }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & ~b.mask_); }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.mask_ <=> b.mask_; }

 private:
  constexpr explicit VertexSet(std::uint64_t mask) : mask_(mask) {}

  std::uint64_t mask_ = 0;
};

/// A member of a k-uniform family.
using Edge = VertexSet;

/// Mask with the low n bits set, i.e. the ground set [n].
constexpr std::uint64_t ground_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Next mask with the same popcount in numeric order (Gosper's hack).
/// Requires mask != 0.
constexpr std::uint64_t next_same_popcount(std::uint64_t mask) {
  const std::uint64_t low = mask & (~mask + 1);
  const std::uint64_t ripple = mask + low;
  if (ripple == 0) return 0;  // wrapped past bit 63
  return ripple | (((mask ^ ripple) >> 2) / low);
}

/// Calls fn(VertexSet) for every size-r subset of `ground`, in colex order.
template <typename Fn>
void for_each_subset_of_size(VertexSet ground, int r, Fn&& fn) {
  const int m = ground.size();
  if (r < 0 || r > m) return;
  if (r == 0) {
    fn(VertexSet{});
    return;
  }
  int pos[kMaxVertices];
  int idx = 0;
  for (std::uint64_t g = ground.mask(); g != 0; g &= g - 1) pos[idx++] = std::countr_zero(g);
  // Enumerate r-subsets of the index range [0, m) and map them through pos.
  std::uint64_t sel = (r == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
  const std::uint64_t limit = ground_mask(m);
  while (sel != 0 && (sel & ~limit) == 0) {
    std::uint64_t out = 0;
    for (std::uint64_t s = sel; s != 0; s &= s - 1) out |= std::uint64_t{1} << pos[std::countr_zero(s)];
    fn(VertexSet::from_mask(out));
    sel = next_same_popcount(sel);
  }
}

}  // namespace extremal
