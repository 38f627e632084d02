#include "prefkb/fca.hpp"

#include <stdexcept>

#include "prefkb/preference.hpp"

namespace prefkb {

Extension down(const ValueSet& values, const PreferenceModel& m) {
  Extension e = Extension::full(m.size());
  for (int i = 0; i < kValueSymbolCount; ++i) {
    ValueSymbol v = ValueSymbol::from_index(i);
    if (values.contains(v)) e &= m.incidence(v);
  }
  return e;
}

ValueSet up(const Extension& worlds, const PreferenceModel& m) {
  if (worlds.width() != m.size()) throw std::invalid_argument("up: width mismatch");
  ValueSet out;
  for (int i = 0; i < kValueSymbolCount; ++i) {
    ValueSymbol v = ValueSymbol::from_index(i);
    if (worlds.subset_of(m.incidence(v))) out.insert(v);
  }
  return out;
}

bool is_concept(const Concept& c, const PreferenceModel& m) {
  return up(c.extent, m) == c.intent && down(c.intent, m) == c.extent;
}

Concept concept_from_extent(const Extension& worlds, const PreferenceModel& m) {
  ValueSet intent = up(worlds, m);
  return {down(intent, m), intent};
}

Concept concept_from_intent(const ValueSet& values, const PreferenceModel& m) {
  Extension extent = down(values, m);
  return {extent, up(extent, m)};
}

Concept concept_meet(const Concept& a, const Concept& b, const PreferenceModel& m) {
  if (!is_concept(a, m) || !is_concept(b, m)) {
    throw std::invalid_argument("concept_meet: operands are not formal concepts");
  }
  return {a.extent & b.extent, up(down(a.intent | b.intent, m), m)};
}

Concept concept_join(const Concept& a, const Concept& b, const PreferenceModel& m) {
  if (!is_concept(a, m) || !is_concept(b, m)) {
    throw std::invalid_argument("concept_join: operands are not formal concepts");
  }
  return {down(up(a.extent | b.extent, m), m), a.intent & b.intent};
}

Extension principle_extension(PartyPrinciple p, const PreferenceModel& m) {
  return down(ValueSet::of(p.principle, p.party), m);
}

Extension aggregate1(PartyPrinciple a, PartyPrinciple b, const PreferenceModel& m) {
  return down(ValueSet::of(a.principle, a.party) & ValueSet::of(b.principle, b.party), m);
}

Extension aggregate2(PartyPrinciple a, PartyPrinciple b, const PreferenceModel& m) {
  return principle_extension(a, m) | principle_extension(b, m);
}

bool vpref(bool strict, const Extension& lhs, const Extension& rhs, const PreferenceModel& m) {
  return sem_lift({LiftPattern::AE, strict}, lhs, rhs, m);
}

Extension conflict_extension(Party x, const PreferenceModel& m) {
  ValueSet all_of_x;
  for (BasicValue v : kBasicValues) all_of_x.insert({v, x});
  return down(all_of_x, m);
}

}  // namespace prefkb
