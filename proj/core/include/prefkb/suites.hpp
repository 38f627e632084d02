#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prefkb/solver.hpp"

namespace prefkb {

enum class EngineChoice { Sat, Enum, Both };

struct SuiteConfig {
  /// Caps every item's bound. Refutations whose smallest witness needs more
  /// worlds than the cap are skipped.
  std::optional<int> bound_cap;
  EngineChoice engine = EngineChoice::Sat;
  bool total = false;
  std::uint64_t seed = 0;
  double budget_seconds = 0;
  int workers = 1;
};

struct SuiteItem {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
  bool skipped = false;
  bool disagreement = false;
  /// Rendered verdicts for failures and engine disagreements.
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteItem> items;

  bool passed() const;
  int disagreements() const;
  /// Pass/fail table; deterministic for a fixed configuration.
  std::string render() const;
};

std::vector<std::string> suite_names();

/// Runs "meta", "values" or "cases". Throws ConfigError for other names.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace prefkb
