#include <doctest.h>

#include "generators.hpp"
#include "prefkb/elaborate.hpp"
#include "prefkb/eval.hpp"
#include "prefkb/fca.hpp"

#include <set>

using namespace prefkb;
using namespace prefkb::testing;

namespace {

using BV = BasicValue;

ValueSet naive_up(const Extension& a, const PreferenceModel& m) {
  ValueSet out;
  for (int i = 0; i < kValueSymbolCount; ++i) {
    ValueSymbol v = ValueSymbol::from_index(i);
    bool all = true;
    for (int w : a.worlds()) all = all && m.incidence(v).contains(w);
    if (all) out.insert(v);
  }
  return out;
}

Extension naive_down(const ValueSet& b, const PreferenceModel& m) {
  Extension out(m.size());
  for (int w = 0; w < m.size(); ++w) {
    bool all = true;
    for (int i = 0; i < kValueSymbolCount; ++i) {
      ValueSymbol v = ValueSymbol::from_index(i);
      if (b.contains(v)) all = all && m.incidence(v).contains(w);
    }
    if (all) out.insert(w);
  }
  return out;
}

ValueSet random_values(Rng& rng) { return ValueSet::of_bits(static_cast<std::uint8_t>(uniform(rng, 0, 255))); }

Extension random_worlds(Rng& rng, int n) {
  return Extension(n, std::uniform_int_distribution<std::uint64_t>(0, Extension::full_mask(n))(rng));
}

}  // namespace

TEST_CASE("principle table") {
  using P = Principle;
  auto vs = [](P p) {
    auto a = principle_values(p);
    return std::set<BV>{a[0], a[1]};
  };
  CHECK(vs(P::WILL) == std::set<BV>{BV::Freedom, BV::Utility});
  CHECK(vs(P::RESP) == std::set<BV>{BV::Freedom, BV::Equality});
  CHECK(vs(P::STAB) == std::set<BV>{BV::Security, BV::Utility});
  CHECK(vs(P::RELI) == std::set<BV>{BV::Security, BV::Equality});
  CHECK(vs(P::EFFI) == vs(P::STAB));
  CHECK(vs(P::GAIN) == vs(P::WILL));
  CHECK(vs(P::FAIR) == vs(P::RESP));
  CHECK(vs(P::EQUI) == vs(P::RELI));
  for (P p : kPrinciples) {
    CHECK(principle_from_name(principle_name(p)) == p);
    CHECK(ValueSet::of(p, Party::D).size() == 2);
  }
  CHECK(ValueSet::all().size() == 8);
  CHECK(other(Party::P) == Party::D);
  CHECK(party_from_name("d") == Party::D);
  CHECK_FALSE(party_from_name("x").has_value());
}

TEST_CASE("derivation operators match naive definitions") {
  Rng rng(1);
  PreferenceModel one(1);
  CHECK(up(Extension::empty(1), one) == ValueSet::all());
  CHECK(down(ValueSet(), one).is_full());
  ValueSymbol sp{BV::Security, Party::P};
  one.set_incidence(sp, Extension::full(1));
  CHECK(up(Extension::full(1), one) == ValueSet::of_bits(static_cast<std::uint8_t>(1U << sp.index())));

  for (int i = 0; i < 500; ++i) {
    const int n = uniform(rng, 1, 4);
    PreferenceModel m = random_model(rng, n, {});
    Extension a = random_worlds(rng, n);
    ValueSet b = random_values(rng);
    CHECK(up(a, m) == naive_up(a, m));
    CHECK(down(b, m) == naive_down(b, m));
  }
}

TEST_CASE("Galois connection laws on 500 random contexts") {
  Rng rng(500);
  for (int i = 0; i < 500; ++i) {
    const int n = uniform(rng, 1, 4);
    PreferenceModel m = random_model(rng, n, {});
    Extension a = random_worlds(rng, n);
    Extension a2 = random_worlds(rng, n);
    ValueSet b = random_values(rng);
    ValueSet b2 = random_values(rng);
    CHECK(b.subset_of(up(a, m)) == a.subset_of(down(b, m)));
    CHECK(down(up(down(b, m), m), m) == down(b, m));
    CHECK(up(down(up(a, m), m), m) == up(a, m));
    if (a.subset_of(a2)) CHECK(up(a2, m).subset_of(up(a, m)));
    if (b.subset_of(b2)) CHECK(down(b2, m).subset_of(down(b, m)));
    CHECK(a.subset_of(down(up(a, m), m)));
    CHECK(b.subset_of(up(down(b, m), m)));
  }
}

TEST_CASE("concept lattice operations") {
  Rng rng(44);
  for (int i = 0; i < 300; ++i) {
    const int n = uniform(rng, 1, 4);
    PreferenceModel m = random_model(rng, n, {});
    Concept c1 = concept_from_extent(random_worlds(rng, n), m);
    Concept c2 = concept_from_intent(random_values(rng), m);
    REQUIRE(is_concept(c1, m));
    REQUIRE(is_concept(c2, m));
    Concept meet = concept_meet(c1, c2, m);
    Concept join = concept_join(c1, c2, m);
    CHECK(is_concept(meet, m));
    CHECK(is_concept(join, m));
    CHECK(meet.extent == (c1.extent & c2.extent));
    CHECK(join.intent == (c1.intent & c2.intent));
    CHECK(up(down(join.intent, m), m) == join.intent);
    CHECK(concept_meet(c1, c1, m) == c1);
    Concept top = concept_from_extent(Extension::full(n), m);
    CHECK(concept_meet(top, c1, m) == c1);
    CHECK(concept_join(top, c1, m) == top);
  }
  PreferenceModel m(2);
  m.set_incidence(ValueSymbol{BV::Freedom, Party::P}, Extension(2, 0b01));
  Concept bogus{Extension(2, 0b10), ValueSet::all()};
  CHECK_FALSE(is_concept(bogus, m));
  CHECK_THROWS_AS(concept_meet(bogus, bogus, m), std::invalid_argument);
}

TEST_CASE("aggregation operators") {
  Rng rng(6);
  for (int i = 0; i < 500; ++i) {
    const int n = uniform(rng, 1, 4);
    PreferenceModel m = random_model(rng, n, {});
    PartyPrinciple a{kPrinciples[uniform(rng, 0, 7)], kParties[uniform(rng, 0, 1)]};
    PartyPrinciple b{kPrinciples[uniform(rng, 0, 7)], kParties[uniform(rng, 0, 1)]};
    CHECK(aggregate2(a, b, m).subset_of(aggregate1(a, b, m)));
    CHECK(aggregate2(a, b, m) == (principle_extension(a, m) | principle_extension(b, m)));
    CHECK(aggregate1(a, b, m) == down(ValueSet::of(a.principle, a.party) & ValueSet::of(b.principle, b.party), m));
    CHECK(aggregate2(a, a, m) == principle_extension(a, m));
    CHECK(principle_extension(a, m) == naive_down(ValueSet::of(a.principle, a.party), m));

    Extension l = random_worlds(rng, n);
    Extension r = random_worlds(rng, n);
    Extension c = random_worlds(rng, n);
    for (bool strict : {false, true}) {
      CHECK(vpref(strict, Extension::empty(n), r, m));
      if (vpref(strict, l, r, m)) CHECK(vpref(strict, l, r | c, m));
    }
  }
  PreferenceModel m(1);
  ValueSet fp;
  fp.insert(ValueSymbol{BV::Freedom, Party::P});
  CHECK(aggregate1({Principle::WILL, Party::P}, {Principle::RESP, Party::P}, m) == down(fp, m));
}

TEST_CASE("conflict extension needs all four values for the party") {
  PreferenceModel m(3);
  for (BV v : kBasicValues) m.set_incidence(ValueSymbol{v, Party::P}, Extension(3, 0b011));
  m.set_incidence(ValueSymbol{BV::Equality, Party::P}, Extension(3, 0b001));
  CHECK(conflict_extension(Party::P, m).bits() == 0b001);
  CHECK(conflict_extension(Party::D, m).is_empty());
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    PreferenceModel r = random_model(rng, uniform(rng, 1, 4), {});
    for (Party x : kParties) {
      CHECK(conflict_extension(x, r) == down(ValueSet::of(Principle::RESP, x) | ValueSet::of(Principle::STAB, x), r));
      CHECK(conflict_extension(x, r) == eval(desugar(f::conflict(f::party(x))), r));
    }
  }
}

TEST_CASE("value-layer desugarings agree with the set operations") {
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    const int n = uniform(rng, 1, 4);
    PreferenceModel m = random_model(rng, n, {});
    PartyPrinciple a{kPrinciples[uniform(rng, 0, 7)], kParties[uniform(rng, 0, 1)]};
    PartyPrinciple b{kPrinciples[uniform(rng, 0, 7)], kParties[uniform(rng, 0, 1)]};
    Formula ea = f::ext(a.principle, f::party(a.party));
    Formula ab = f::agg({{a.principle, f::party(a.party)}, {b.principle, f::party(b.party)}});
    CHECK(eval(desugar(ea), m) == principle_extension(a, m));
    CHECK(eval(desugar(ab), m) == aggregate2(a, b, m));
    for (bool strict : {false, true}) {
      Formula v = desugar(f::vpref(strict, ea, ab));
      CHECK(eval(v, m).is_full() == vpref(strict, principle_extension(a, m), aggregate2(a, b, m), m));
    }
  }
}
