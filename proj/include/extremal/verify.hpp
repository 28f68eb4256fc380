#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "extremal/oracle.hpp"

namespace extremal {

/// Knobs shared by the property suites. Unset values take per-suite
/// defaults (listed in suite_names()).
struct SuiteOptions {
  std::uint64_t seed = 0;
  std::optional<int> k;
  std::optional<int> s;
  std::optional<int> n_max;
  std::optional<int> samples;
  SearchBudget budget;
};

struct SuiteReport {
  std::string suite;
  bool passed = false;
  bool inconclusive = false;  // some oracle call ran out of budget
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> lines;  // human-readable findings, one per line
};

struct SuiteInfo {
  std::string_view name;
  std::string_view summary;
};

/// Every suite accepted by run_suite, in a stable order.
std::span<const SuiteInfo> suite_names();

/// Runs one named suite. Throws ArgumentError for an unknown name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace extremal
