#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "prefkb/formula.hpp"
#include "prefkb/signature.hpp"
#include "prefkb/solver.hpp"

namespace prefkb {

enum class EntryKind { Axiom, Fact, Goal };

struct KbEntry {
  std::string name;
  Formula formula;  // surface form, as parsed
};

/// Settings a KB document may carry with `(option key value)`.
struct KbOptions {
  std::optional<int> bound;
  std::optional<bool> total;
  std::optional<std::uint64_t> seed;
};

/// Named axioms (global), facts (world 0) and goals (queried at world 0)
/// over a signature. Entry names are unique across the three lists.
class KnowledgeBase {
 public:
  std::string name;
  Signature sig;
  std::vector<KbEntry> axioms;
  std::vector<KbEntry> facts;
  std::vector<KbEntry> goals;
  std::vector<std::string> imports;
  KbOptions options;

  /// Adds the signature and entries of `other`. Entries whose name is
  /// already present must carry an identical formula, otherwise
  /// SemanticError is thrown; identical ones are skipped.
  void merge(const KnowledgeBase& other);
  void add(EntryKind kind, KbEntry entry);
  /// Removes an entry by name; false if absent.
  bool remove(const std::string& entry_name);
  const KbEntry* find(const std::string& entry_name, EntryKind* kind = nullptr) const;

  Formula elaborate(const Formula& f) const;
  std::vector<Formula> elaborated(EntryKind kind) const;
};

/// Supplies the text of an imported KB by name, or nullopt.
using KbResolver = std::function<std::optional<std::string>(const std::string&)>;

/// Text of a shipped case file ("general.kb", "pierson.proof", ...).
std::optional<std::string> builtin_file(const std::string& file_name);
/// Names of all shipped case files.
std::vector<std::string> builtin_file_names();

/// Resolves `name` to the shipped `name.kb`.
KbResolver builtin_resolver();

/// Parses a KB document. Top-level forms: (sort NAME CONST+), (atom NAME
/// SORT*), (axiom NAME F), (fact NAME F), (goal NAME F), (option KEY VALUE)
/// and (import NAME). Declarations must precede their use.
KnowledgeBase parse_kb(const std::string& text, const std::string& name,
                       const KbResolver& resolve = builtin_resolver());

/// Loads a KB file; imports are looked up next to it, then among the
/// shipped case files.
KnowledgeBase load_kb_file(const std::string& path);

KnowledgeBase default_general_knowledge();
KnowledgeBase case_pierson();
KnowledgeBase case_post();
KnowledgeBase case_conti();

struct QueryOptions {
  int bound = 4;
  bool total = false;
  std::uint64_t seed = 0;
  Budget budget;
  int workers = 1;
};

/// Values flagged as given in `base` win over the KB's options, which win
/// over the defaults.
QueryOptions resolve_options(const KnowledgeBase& kb, const QueryOptions& base,
                             bool bound_given, bool total_given, bool seed_given);

/// Axioms + facts entail `goal` at world 0.
Query entail_query(const KnowledgeBase& kb, const Formula& goal, const QueryOptions& o);
/// Axioms alone entail `goal` at world 0 (facts ignored).
Query validity_query(const KnowledgeBase& kb, const Formula& goal, const QueryOptions& o);
/// Axioms + facts (+ `extra` at world 0, if given) are satisfiable.
Query model_query(const KnowledgeBase& kb, const QueryOptions& o, const Formula& extra = nullptr);

/// Requirement used for "non-trivial" models: some strict betterness edge.
Formula nontrivial_requirement();

struct ConflictFinding {
  Party party;
  bool entailed = false;
  Verdict verdict;
};

struct ConflictReport {
  std::vector<ConflictFinding> findings;
  bool any_entailed() const;
  std::string render() const;
};

/// Checks, per party, whether axioms + facts entail Conflict(x) at world 0.
ConflictReport conflict_audit(const KnowledgeBase& kb, const QueryOptions& o,
                              Engine engine = Engine::Sat);

}  // namespace prefkb
