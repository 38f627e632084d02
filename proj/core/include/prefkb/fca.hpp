#pragma once

#include "prefkb/extension.hpp"
#include "prefkb/model.hpp"
#include "prefkb/values.hpp"

namespace prefkb {

// Formal concept analysis over the context (worlds, value symbols, incidence).

/// Extent of a value set: worlds incident with every member. down({}) = W.
Extension down(const ValueSet& values, const PreferenceModel& m);

/// Intent of a world set: value symbols shared by every member. up({}) = all.
ValueSet up(const Extension& worlds, const PreferenceModel& m);

struct Concept {
  Extension extent;
  ValueSet intent;
  bool operator==(const Concept&) const = default;
};

bool is_concept(const Concept& c, const PreferenceModel& m);
Concept concept_from_extent(const Extension& worlds, const PreferenceModel& m);
Concept concept_from_intent(const ValueSet& values, const PreferenceModel& m);

/// Lattice operations; both throw std::invalid_argument on non-concepts.
Concept concept_meet(const Concept& a, const Concept& b, const PreferenceModel& m);
Concept concept_join(const Concept& a, const Concept& b, const PreferenceModel& m);

struct PartyPrinciple {
  Principle principle;
  Party party;
};

Extension principle_extension(PartyPrinciple p, const PreferenceModel& m);

/// Join-based aggregation: extent of the shared values.
Extension aggregate1(PartyPrinciple a, PartyPrinciple b, const PreferenceModel& m);
/// Union of the two extents. Always a subset of aggregate1.
Extension aggregate2(PartyPrinciple a, PartyPrinciple b, const PreferenceModel& m);

/// Value preference: the AE lift, strict or weak.
bool vpref(bool strict, const Extension& lhs, const Extension& rhs, const PreferenceModel& m);

/// Worlds where all four basic values apply to `x`.
Extension conflict_extension(Party x, const PreferenceModel& m);

}  // namespace prefkb
