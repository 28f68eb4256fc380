#include "extremal/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "extremal/errors.hpp"
#include "extremal/formulas.hpp"
#include "extremal/operators.hpp"

namespace extremal {
namespace {

std::string str(long long v) { return std::to_string(v); }

void require(bool ok, const std::string& what) {
  if (!ok) throw ArgumentError(what);
}

template <typename Keep>
Family filter_complete(int n, int k, Keep&& keep) {
  check_ground_size(n);
  std::vector<Edge> out;
  for_each_subset_of_size(VertexSet::from_mask(ground_mask(n)), k, [&](Edge e) {
    if (keep(e)) out.push_back(e);
  });
  return make_family_unchecked(n, k, std::move(out));
}

int param(const ConstructionSpec& spec, const char* key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end())
    throw ArgumentError(std::string("construction ") + std::string(kind_name(spec.kind)) + " needs parameter " + key);
  return it->second;
}

int param_or(const ConstructionSpec& spec, const char* key, int fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

}  // namespace

std::string_view kind_name(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::E: return "E";
    case ConstructionKind::HM: return "HM";
    case ConstructionKind::T3: return "T3";
    case ConstructionKind::B: return "B";
    case ConstructionKind::L: return "L";
    case ConstructionKind::A: return "A";
    case ConstructionKind::Clique: return "CLIQUE";
    case ConstructionKind::Lex: return "LEX";
    case ConstructionKind::Cyc: return "CYC";
  }
  return "?";
}

ConstructionKind parse_kind(std::string_view name) {
  std::string up(name);
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
  for (auto kind : {ConstructionKind::E, ConstructionKind::HM, ConstructionKind::T3, ConstructionKind::B,
                    ConstructionKind::L, ConstructionKind::A, ConstructionKind::Clique, ConstructionKind::Lex,
                    ConstructionKind::Cyc})
    if (kind_name(kind) == up) return kind;
  throw ArgumentError("unknown family '" + std::string(name) + "' (expected E, HM, T3, B, L, A, CLIQUE, LEX, CYC)");
}

Family hitting_family(int n, int k, int s) {
  require(s >= 1, "E requires s >= 1, got s=" + str(s));
  require(k >= 1 && k <= n, "E requires 1 <= k <= n");
  require(s <= n, "E requires s <= n");
  const VertexSet head = VertexSet::interval(1, s);
  return filter_complete(n, k, [&](Edge e) { return e.meets(head); });
}

Family hilton_milner_family(int n, int k) {
  require(k >= 1, "HM requires k >= 1");
  require(n >= k + 1, "HM requires n >= k+1, got n=" + str(n) + " k=" + str(k));
  const VertexSet block = VertexSet::interval(2, k + 1);
  return filter_complete(n, k, [&](Edge e) { return (e.contains(1) && e.meets(block)) || e == block; });
}

Family triangle_family(int n) {
  require(n >= 3, "T3 requires n >= 3");
  const VertexSet head = VertexSet::interval(1, 3);
  return filter_complete(n, 3, [&](Edge e) { return (e & head).size() >= 2; });
}

Family cover_gap_family(int n, int k, int s) {
  require(s >= 1, "B requires s >= 1, got s=" + str(s));
  require(k >= 1, "B requires k >= 1");
  require(n >= s + k, "B requires n >= s+k = " + str(s + k) + ", got n=" + str(n));
  const VertexSet head = VertexSet::interval(1, s - 1);
  const VertexSet block = VertexSet::interval(s + 1, s + k);
  return filter_complete(n, k, [&](Edge e) {
    if (e.meets(head) || e == block) return true;
    return !e.meets(head) && e.contains(s) && e.meets(block);
  });
}

Family clique_intersecting_family(int n, int k, int q) {
  require(k < q && q < 2 * k, "L requires k < q < 2k, got k=" + str(k) + " q=" + str(q));
  require(n >= q, "L requires n >= q, got n=" + str(n) + " q=" + str(q));
  const VertexSet clique = VertexSet::interval(1, q);
  // The clique is listed separately even where the second clause covers it.
  return filter_complete(n, k, [&](Edge e) {
    return e.subset_of(clique) || (e.contains(1) && (e & clique).size() > q - k);
  });
}

Family clique_matching_family(int n, int q, int k, int s) {
  const auto [p, r] = derive_pr(q, k, s);
  require(n >= q, "A requires n >= q, got n=" + str(n) + " q=" + str(q));
  check_ground_size(n);
  const VertexSet clique = VertexSet::interval(1, q);
  const VertexSet head = VertexSet::interval(1, p);
  const VertexSet tail = VertexSet::interval(p + 2, q);
  Family out = filter_complete(n, k, [&](Edge e) {
    if (e.subset_of(clique)) return true;
    if (e.meets(head)) return true;
    return e.contains(p + 1) && (e & tail).size() >= r;
  });
  const BigInt expected = size_A(n, q, k, s);
  if (BigInt(out.size()) != expected)
    throw std::logic_error("A(" + str(n) + "," + str(q) + "," + str(k) + "," + str(s) + ") enumerated " +
                           str(static_cast<long long>(out.size())) + " edges but size_A gives " +
                           to_string(expected));
  return out;
}

Family clique_family(int n, int q, int k) {
  require(k >= 0 && k <= q, "CLIQUE requires 0 <= k <= q");
  require(q <= n, "CLIQUE requires q <= n, got q=" + str(q) + " n=" + str(n));
  check_ground_size(n);
  return filter_complete(n, k, [clique = VertexSet::interval(1, q)](Edge e) { return e.subset_of(clique); });
}

std::vector<int> identity_permutation(int m) {
  std::vector<int> sigma(static_cast<std::size_t>(std::max(m, 0)));
  std::iota(sigma.begin(), sigma.end(), 1);
  return sigma;
}

Family cyclic_intervals(const std::vector<int>& sigma, int l) {
  const int m = static_cast<int>(sigma.size());
  check_ground_size(m);
  require(1 <= l && l < m, "cyclic intervals require 1 <= l < m, got l=" + str(l) + " m=" + str(m));
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  require(sorted == identity_permutation(m), "sigma must be a permutation of [m]");
  std::vector<Edge> edges;
  edges.reserve(sigma.size());
  for (int i = 0; i < m; ++i) {
    std::uint64_t mask = 0;
    for (int j = 0; j < l; ++j) mask |= std::uint64_t{1} << (sigma[static_cast<std::size_t>((i + j) % m)] - 1);
    edges.push_back(Edge::from_mask(mask));
  }
  return Family(m, l, std::move(edges));
}

Family build(const ConstructionSpec& spec) {
  switch (spec.kind) {
    case ConstructionKind::E:
      return hitting_family(param(spec, "n"), param(spec, "k"), param(spec, "s"));
    case ConstructionKind::HM:
      return hilton_milner_family(param(spec, "n"), param(spec, "k"));
    case ConstructionKind::T3: {
      const int k = param_or(spec, "k", 3);
      require(k == 3, "T3 requires k = 3, got k=" + str(k));
      return triangle_family(param(spec, "n"));
    }
    case ConstructionKind::B:
      return cover_gap_family(param(spec, "n"), param(spec, "k"), param(spec, "s"));
    case ConstructionKind::L:
      return clique_intersecting_family(param(spec, "n"), param(spec, "k"), param(spec, "q"));
    case ConstructionKind::A:
      return clique_matching_family(param(spec, "n"), param(spec, "q"), param(spec, "k"), param(spec, "s"));
    case ConstructionKind::Clique: {
      const int q = param(spec, "q");
      return clique_family(param_or(spec, "n", q), q, param(spec, "k"));
    }
    case ConstructionKind::Lex: {
      const int m = param(spec, "m");
      require(m >= 0, "LEX requires m >= 0");
      return lex_family(param(spec, "n"), param(spec, "k"), static_cast<std::uint64_t>(m));
    }
    case ConstructionKind::Cyc: {
      std::vector<int> sigma = spec.sigma;
      if (sigma.empty()) sigma = identity_permutation(param(spec, "n"));
      else if (auto it = spec.params.find("n"); it != spec.params.end())
        require(it->second == static_cast<int>(sigma.size()), "CYC: n must equal the length of sigma");
      return cyclic_intervals(sigma, param(spec, "l"));
    }
  }
  throw ArgumentError("unknown construction");
}

}  // namespace extremal
