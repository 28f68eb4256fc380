#include "extremal/shifting.hpp"

#include <algorithm>

#include "extremal/errors.hpp"

namespace extremal {
namespace {

// Applies S_ij; returns true when at least one edge moved.
bool apply_shift(const Family& f, int i, int j, std::vector<Edge>& out) {
  const std::uint64_t bi = std::uint64_t{1} << (i - 1);
  const std::uint64_t bj = std::uint64_t{1} << (j - 1);
  out.clear();
  out.reserve(f.size());
  bool changed = false;
  for (Edge e : f) {
    const std::uint64_t m = e.mask();
    if ((m & bj) != 0 && (m & bi) == 0) {
      const Edge image = Edge::from_mask((m & ~bj) | bi);
      if (!f.contains(image)) {
        out.push_back(image);
        changed = true;
        continue;
      }
    }
    out.push_back(e);
  }
  if (changed) std::sort(out.begin(), out.end());
  return changed;
}

}  // namespace

Family shift_ij(const Family& f, int i, int j) {
  if (!(1 <= i && i < j && j <= f.n()))
    throw ArgumentError("shift requires 1 <= i < j <= n, got i=" + std::to_string(i) +
                        " j=" + std::to_string(j) + " n=" + std::to_string(f.n()));
  std::vector<Edge> out;
  if (!apply_shift(f, i, j, out)) return f;
  return make_family_unchecked(f.n(), f.k(), std::move(out));
}

Family shift_closure(const Family& f) {
  Family cur = f;
  std::vector<Edge> out;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= f.n(); ++i) {
      for (int j = i + 1; j <= f.n(); ++j) {
        if (apply_shift(cur, i, j, out)) {
          cur = make_family_unchecked(f.n(), f.k(), out);
          changed = true;
        }
      }
    }
  }
  return cur;
}

bool is_shifted(const Family& f) {
  for (Edge e : f) {
    const std::uint64_t m = e.mask();
    for (std::uint64_t rest = m; rest != 0; rest &= rest - 1) {
      const int jb = std::countr_zero(rest);
      // Every i < j outside the edge.
      for (int ib = 0; ib < jb; ++ib) {
        if ((m >> ib) & 1U) continue;
        const Edge g = Edge::from_mask((m & ~(std::uint64_t{1} << jb)) | (std::uint64_t{1} << ib));
        if (!f.contains(g)) return false;
      }
    }
  }
  return true;
}

bool precedes(Edge a, Edge b) {
  if (a.size() != b.size())
    throw ArgumentError("precedes requires sets of equal size, got " + std::to_string(a.size()) +
                        " and " + std::to_string(b.size()));
  std::uint64_t x = a.mask();
  std::uint64_t y = b.mask();
  while (x != 0) {
    if (std::countr_zero(x) > std::countr_zero(y)) return false;
    x &= x - 1;
    y &= y - 1;
  }
  return true;
}

}  // namespace extremal
