#pragma once

#include <vector>

#include "prefkb/eval.hpp"
#include "prefkb/extension.hpp"
#include "prefkb/formula.hpp"
#include "prefkb/model.hpp"

namespace prefkb {

/// Lifting of the betterness order to sets of worlds.
struct Lift {
  LiftPattern pattern;
  bool strict;
};

/// All eight lifts, weak before strict, in EE, EA, AE, AA order.
std::vector<Lift> all_lifts();

/// Semantic lifted preference a R b. The result is a fact about the whole
/// model, not about a world:
///   EE  some s in a, some t in b, s R t
///   EA  some t in b such that every s in a has s R t
///   AE  every s in a has some t in b with s R t
///   AA  every s in a and every t in b have s R t
/// where R is ≼ (weak) or ≺ (strict).
bool sem_lift(Lift lift, const Extension& a, const Extension& b, const PreferenceModel& m);

/// The same lift evaluated over explicit relations (used for ceteris paribus).
bool sem_lift(Lift lift, const Extension& a, const Extension& b, const Relation& weak,
              const Relation& strict);

struct RelationPair {
  Relation weak;
  Relation strict;
};

/// Betterness restricted to pairs of worlds that agree on every member of
/// the context: (≼ ∩ ≡Γ, ≺ ∩ ≡Γ).
RelationPair cp_relation(const std::vector<Extension>& gamma, const PreferenceModel& m);
RelationPair cp_relation(const std::vector<Formula>& gamma, const PreferenceModel& m);

/// Pairs of worlds that agree on every member of the context.
Relation cp_agreement(const std::vector<Extension>& gamma, int n);

/// Guarded AA lift: every a-world s and b-world t that agree on the context
/// have s R t, with R the weak or strict betterness.
bool cp_pref_aa(bool strict, const Extension& a, const Extension& b, const std::vector<Extension>& gamma,
                const PreferenceModel& m);

/// Evaluates a CpDiaLeq, CpDiaLt or CpPrefAA node.
Extension cp_eval(const Formula& node, const PreferenceModel& m);
Extension cp_eval(const Node& node, Evaluator& ev);

/// b is more likely than a: every a-world s has some b-world v with s ≺ v
/// such that no a-world lies strictly above v.
bool halpern_more_likely(const Extension& a, const Extension& b, const PreferenceModel& m);

/// ≼-maximal members of a: those with no strictly better world inside a.
Extension best_worlds(const Extension& a, const PreferenceModel& m);

}  // namespace prefkb
