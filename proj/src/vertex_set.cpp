#include "extremal/vertex_set.hpp"

#include "extremal/errors.hpp"

namespace extremal {
namespace {

void check_vertex(int v) {
  if (v < 1) throw ArgumentError("vertex " + std::to_string(v) + " is not positive");
  if (v > kMaxVertices)
    throw CapacityError("vertex " + std::to_string(v) + " exceeds the supported ground set [1, 64]");
}

}  // namespace

VertexSet VertexSet::of(std::span<const int> vertices) {
  std::uint64_t mask = 0;
  for (int v : vertices) {
    check_vertex(v);
    mask |= std::uint64_t{1} << (v - 1);
  }
  return VertexSet(mask);
}

VertexSet VertexSet::interval(int first, int last) {
  if (first > last) return {};
  check_vertex(first);
  check_vertex(last);
  return VertexSet(ground_mask(last) & ~ground_mask(first - 1));
}

VertexSet VertexSet::with(int v) const {
  check_vertex(v);
  return VertexSet(mask_ | (std::uint64_t{1} << (v - 1)));
}

VertexSet VertexSet::without(int v) const {
  check_vertex(v);
  return VertexSet(mask_ & ~(std::uint64_t{1} << (v - 1)));
}

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int v : vertices()) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  s += '}';
  return s;
}

}  // namespace extremal
