#pragma once

#include <cstdint>
#include <random>

#include "extremal/family.hpp"

namespace extremal {

/// Seeded generator used by every randomized suite. The helpers below only
/// consume raw 64-bit outputs, so a seed reproduces the same samples on any
/// platform.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection; bound must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform k-subset of [n].
Edge random_k_subset(Rng& rng, int n, int k);

/// m distinct uniformly chosen k-subsets of [n]; m is clipped to C(n, k).
Family random_family(Rng& rng, int n, int k, std::uint64_t m);

/// Visits k-subsets of [n] in random order and keeps each one whose addition
/// keeps the matching number at most s, stopping after `target` edges.
Family random_family_with_matching_at_most(Rng& rng, int n, int k, int s, std::uint64_t target);

}  // namespace extremal
