#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prefkb/formula.hpp"
#include "prefkb/model.hpp"
#include "prefkb/sat.hpp"

namespace prefkb {

enum class QueryMode { FindModel, Refute, Entail };

struct Budget {
  double seconds = 0;   // wall clock for the whole check; 0 = unlimited
  long conflicts = 0;   // per SAT call; 0 = unlimited
  long models = 0;      // enumeration leaves; 0 = unlimited
};

/// A bounded query. All formulas must already be grounded and desugared.
/// Axioms hold at every world, facts at world 0. Refute and entail assert the
/// negated target at world 0; find-model asserts it.
struct Query {
  QueryMode mode = QueryMode::Refute;
  std::vector<Formula> axioms;
  std::vector<Formula> facts;
  Formula target;  // null means ⊤
  /// Ground atom keys that witnesses should mention even when unconstrained.
  std::vector<std::string> declared_atoms;
  int bound = 4;
  FrameOptions frame;
  Budget budget;
  std::uint64_t seed = 0;
  int workers = 1;
};

enum class VerdictKind { BoundedValid, Countermodel, Satisfiable, Unsatisfiable, Unknown };

struct SolveStats {
  long decisions = 0;
  long conflicts = 0;
  long models_tried = 0;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  /// Largest world count fully explored (BoundedValid, Unsatisfiable, Unknown).
  int bound_reached = 0;
  std::optional<PreferenceModel> witness;
  /// World where the target fails (countermodels) or holds (models).
  int world = 0;
  std::string reason;
  SolveStats stats;

  /// True for BoundedValid and Satisfiable.
  bool positive() const {
    return kind == VerdictKind::BoundedValid || kind == VerdictKind::Satisfiable;
  }
  /// One line, e.g. "BOUNDED-VALID (no countermodel up to 4 worlds)".
  std::string headline() const;
  /// Headline followed by the witness in text form, if any.
  std::string render() const;
};

std::string_view verdict_kind_name(VerdictKind k);

enum class Engine { Sat, Enum };

/// Variable layout of an encoding, kept for decoding.
struct Encoding {
  CnfInstance cnf;
  int n = 0;
  std::vector<std::vector<int>> rel;             // rel[i][j], 0 on the diagonal
  std::vector<std::string> atom_keys;            // sorted
  std::vector<std::vector<int>> atom_vars;       // [atom][world]
  std::vector<int> incidence_symbols;            // ValueSymbol indices used
  std::vector<std::vector<int>> incidence_vars;  // [symbol][world]
};

/// Propositional encoding of `q` over exactly `n` worlds.
Encoding encode(const Query& q, int n);
PreferenceModel decode(const Encoding& e, const std::vector<bool>& assignment,
                       const std::vector<std::string>& declared_atoms = {});

/// Iterative deepening over n = 1..q.bound with the chosen engine.
Verdict check(const Query& q, Engine engine = Engine::Sat);

/// Exhaustive search at exactly n ≤ 3 worlds; same verdict contract as
/// check restricted to that size. Throws ConfigError for n > 3.
Verdict enum_oracle(const Query& q, int n);

/// Every reflexive-transitive relation on n worlds (totality filter optional),
/// in increasing order of the off-diagonal bit pattern.
std::vector<Relation> enumerate_preorders(int n, bool total = false);

/// True iff `m` satisfies the query's constraints: axioms everywhere, facts at
/// world 0, and the (possibly negated) target at world 0.
bool witness_ok(const Query& q, const PreferenceModel& m);

}  // namespace prefkb
