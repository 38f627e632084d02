#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace prefkb {

/// Clause set over variables 1..num_vars; literals are DIMACS-style signed ints.
struct CnfInstance {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  int new_var() { return ++num_vars; }
  void add(std::vector<int> clause) { clauses.push_back(std::move(clause)); }
};

struct SatBudget {
  long max_conflicts = 0;  // 0 = unlimited
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct SatStats {
  long decisions = 0;
  long conflicts = 0;
  long propagations = 0;
};

enum class SatStatus { Sat, Unsat, Unknown };

struct SatResult {
  SatStatus status = SatStatus::Unknown;
  /// model[v] for v in 1..num_vars (index 0 unused).
  std::vector<bool> model;
  SatStats stats;
};

/// CDCL search with two watched literals, first-UIP learning and Luby
/// restarts. Branching prefers higher activity and then lower variable
/// index; a non-zero seed adds a fixed tie-breaking perturbation, so the
/// result is a function of (instance, seed).
SatResult sat_solve(const CnfInstance& cnf, std::uint64_t seed = 0, const SatBudget& budget = {});

}  // namespace prefkb
