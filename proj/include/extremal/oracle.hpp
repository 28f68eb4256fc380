#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extremal/family.hpp"

namespace extremal {

/// M_STAR: shifted, nu = s and omega = q exactly.
/// M: nu <= s and omega >= q (shifted families suffice, since shifting
/// keeps the size, never raises nu and never lowers omega).
enum class SearchMode { MStar, M };

struct SearchBudget {
  std::uint64_t node_limit = 100'000'000;
  std::chrono::milliseconds time_limit{std::chrono::minutes(10)};
};

struct SearchProblem {
  int n = 0;
  int k = 0;
  int s = 0;
  int q = 0;
  SearchMode mode = SearchMode::MStar;
  SearchBudget budget;
  int threads = 1;
};

struct SearchResult {
  long long value = 0;
  Family witness;
  std::uint64_t nodes_explored = 0;
  bool proven_optimal = false;
};

/// Largest number of k-subsets the search will index.
inline constexpr std::uint64_t kMaxSearchEdges = 20'000;

/// Exact m*(n,q,k,s) by branch and bound over the down-sets of the shifting
/// order. Edges are decided in colex order (a linear extension), include
/// first. The k-sets of [q] are forced in; in M_STAR mode the set
/// {q-k+2, ..., q+1} and everything above it are forced out. Leaves must have
/// nu = s. Infeasible problems return value 0 with an empty witness. When the
/// budget runs out the best value found so far is returned with
/// proven_optimal = false.
SearchResult exact_m_star(const SearchProblem& problem);

/// Exact m(n,q,k,s) by a direct search (nu <= s, k-sets of [q] forced in).
/// q >= (s+1)k gives 0.
SearchResult exact_m(const SearchProblem& problem);

/// m(n,q,k,s) as the maximum of m*(n,t,k,s) over q <= t < (s+1)k.
/// Requires n >= (s+1)k.
SearchResult exact_m_via_stars(const SearchProblem& problem);

/// Which branches of the clique-number trichotomy hold for a family with
/// nu <= s: contained in E(n,k,s); s+k <= omega < sk+k-1; equal to
/// C([sk+k-1],k). For shifted families with k >= 2 exactly one holds.
struct Trichotomy {
  bool inside_star = false;
  bool mid_clique = false;
  bool full_clique = false;
};

Trichotomy trichotomy_branches(const Family& f, int s);

enum class Identity { Recursion, Monotonicity, StarMax, Trichotomy };

std::string_view identity_name(Identity id);
Identity parse_identity(std::string_view name);

struct IdentityParams {
  int n = 0;
  int q = 0;
  int k = 0;
  int s = 0;
  SearchBudget budget;
  std::uint64_t seed = 0;
  int samples = 1000;  // trichotomy sample count
  int n_max = 9;       // trichotomy: largest ground set sampled; monotonicity: largest n
  int k_max = 3;       // trichotomy / monotonicity: largest k
  int s_max = 5;       // monotonicity: largest s
};

struct IdentityReport {
  Identity identity = Identity::StarMax;
  bool holds = false;
  bool inconclusive = false;
  long long lhs = 0;
  long long rhs = 0;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::string detail;
  std::optional<Family> counterexample;
};

/// Recomputes both sides of an identity and reports equality or a
/// counterexample.
///  recursion:    m*(n,q,k,s) against C(n-1,k-1) + m*(n-1,q-1,k,s-1). The
///                inequality >= is expected always; equality is required
///                only when the optimal witness is reducible, i.e. its
///                members avoiding vertex 1 have matching number s-1.
///  monotonicity: size_A(n,q) >= size_A(n,q+1) for k <= k_max, s <= s_max,
///                2q <= n <= n_max.
///  star-max:     exact_m against exact_m_via_stars.
///  trichotomy:   `samples` random shifted families with nu <= s.
IdentityReport verify_identity(Identity identity, const IdentityParams& params);

}  // namespace extremal
