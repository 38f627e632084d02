#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prefkb/kb.hpp"
#include "prefkb/solver.hpp"

namespace prefkb {

struct ProofStep {
  std::string name;
  Formula formula;  // claimed at world 0; write (A ...) for global claims
  std::vector<std::string> uses;
  int bound = 4;
  int line = 0;
};

struct ProofScript {
  std::vector<ProofStep> steps;
};

/// Parses `(step NAME FORMULA (uses NAME*) (bound N))` forms; the bound
/// clause is optional. Throws ParseError / SemanticError.
ProofScript parse_proof(const std::string& text, const Signature& sig);

struct StepResult {
  std::string name;
  bool passed = false;
  /// Verdict of the step's own check; for failures caused by a dependency
  /// this is the dependency's failing verdict.
  Verdict verdict;
  /// KB names the step lists but the KB lacks; checked without them.
  std::vector<std::string> missing;
  /// Earlier step whose failure this step inherits, if any.
  std::string failed_dependency;
};

struct ReplayReport {
  std::vector<StepResult> steps;
  bool passed() const;
  const StepResult* first_failure() const;
  std::string render() const;
};

struct ReplayOptions {
  QueryOptions query;
  /// Caps every step's bound when set.
  std::optional<int> bound_cap;
};

/// Checks each step as a bounded entailment from exactly its listed
/// justifications: KB axioms stay global, KB facts and earlier steps hold at
/// world 0. A step also fails when a step it uses failed. References to
/// unknown or later steps throw SemanticError.
ReplayReport replay(const ProofScript& script, const KnowledgeBase& kb,
                    const ReplayOptions& options = {}, Engine engine = Engine::Sat);

}  // namespace prefkb
