#include <doctest.h>

#include "generators.hpp"
#include "prefkb/elaborate.hpp"
#include "prefkb/errors.hpp"
#include "prefkb/parser.hpp"

using namespace prefkb;
using namespace prefkb::testing;

namespace {

bool only_core(const Formula& g) {
  if (!is_core_kind(g->kind)) return false;
  for (const auto& c : g->children) {
    if (!only_core(c)) return false;
  }
  for (const auto& c : g->gamma) {
    if (!only_core(c)) return false;
  }
  return true;
}

Signature rich_signature() {
  Signature s = abc_signature();
  s.add_sort("thing", {"fox", "hen"});
  s.add_atom("Wild", {"thing"});
  s.add_atom("Owns", {"contender", "thing"});
  return s;
}

}  // namespace

TEST_CASE("reader tracks positions and skips comments") {
  auto xs = read_sexprs("; header\n(a b\n  (c d))  e");
  REQUIRE(xs.size() == 2);
  CHECK(xs[0].line == 2);
  CHECK(xs[0].column == 1);
  CHECK(xs[0].items[2].line == 3);
  CHECK(xs[0].items[2].column == 3);
  CHECK(xs[1].is_symbol("e"));
}

TEST_CASE("parse errors carry line and column") {
  const Signature sig = abc_signature();
  try {
    parse_formula("(and A\n  (or B", sig);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() >= 1);
    CHECK(e.column() >= 1);
  }
  try {
    parse_formula("(and A\n   (implies B))", sig);
    FAIL("expected an arity error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 4);
  }
  CHECK_THROWS_AS(parse_formula(")", sig), ParseError);
  CHECK_THROWS_AS(parse_formula("()", sig), ParseError);
  CHECK_THROWS_AS(parse_formula("A B", sig), ParseError);
}

TEST_CASE("semantic errors for undeclared or ill-sorted symbols") {
  const Signature sig = rich_signature();
  CHECK_THROWS_AS(parse_formula("Z", sig), SemanticError);
  CHECK_THROWS_AS(parse_formula("(Wild p)", sig), SemanticError);
  CHECK_THROWS_AS(parse_formula("(Owns fox p)", sig), SemanticError);
  CHECK_THROWS_AS(parse_formula("(Wild (other fox))", sig), SemanticError);
  CHECK_THROWS_AS(parse_formula("(ext NOPE p)", sig), Error);
  CHECK_THROWS_AS(parse_formula("(forall x contender (For y))", sig), SemanticError);
  CHECK_NOTHROW(parse_formula("(forall x thing (implies (Wild x) (exists y contender (Owns y x))))", sig));
}

TEST_CASE("fixed examples parse to the expected trees") {
  const Signature sig = abc_signature();
  CHECK(equal(parse_formula("(and A (not B))", sig), f::conj(f::atom("A"), f::neg(f::atom("B")))));
  CHECK(equal(parse_formula("(boxlt (For (other p)))", sig),
              f::box_lt(f::atom("For", {f::t("p", 1)}))));
  CHECK(equal(parse_formula("(prefsyn ea strict A B)", sig),
              f::syn_pref(LiftPattern::EA, true, f::atom("A"), f::atom("B"))));
  CHECK(equal(parse_formula("(vpref weak (ext WILL p) (agg (STAB d) (EFFI p)))", sig),
              f::vpref(false, f::ext(Principle::WILL, f::party(Party::P)),
                       f::agg({{Principle::STAB, f::party(Party::D)}, {Principle::EFFI, f::party(Party::P)}}))));
  CHECK(equal(parse_formula("(cp-dialt (A B) C)", sig), f::cp_dia_lt({f::atom("A"), f::atom("B")}, f::atom("C"))));
  CHECK(equal(parse_formula("true", sig), f::top()));
  CHECK(equal(parse_formula("(val SECURITY d)", sig), f::incidence(BasicValue::Security, f::party(Party::D))));
}

TEST_CASE("print then parse is the identity on random surface formulas") {
  const Signature sig = abc_signature();
  Rng rng(11);
  for (int i = 0; i < 400; ++i) {
    Formula g = random_surface_formula(rng, 4);
    const std::string text = print(g);
    Formula back = parse_formula(text, sig);
    INFO(text);
    CHECK(equal(g, back));
    CHECK(print(back) == text);
  }
}

TEST_CASE("grounding expands binders over the finite sorts") {
  const Signature sig = rich_signature();
  Formula g = ground(parse_formula("(forall x thing (Wild x))", sig), sig);
  CHECK(equal(g, f::conj(f::atom("Wild", {f::t("fox")}), f::atom("Wild", {f::t("hen")}))));
  Formula h = ground(parse_formula("(exists x contender (For (other x)))", sig), sig);
  CHECK(equal(h, f::disj(f::atom("For", {f::t("d")}), f::atom("For", {f::t("p")}))));
  CHECK(equal(ground(parse_formula("(For (other (other p)))", sig), sig), f::atom("For", {f::t("p")})));
  CHECK(is_grounded(g));
  CHECK_FALSE(is_grounded(parse_formula("(forall x thing (Wild x))", sig)));
}

TEST_CASE("desugaring examples") {
  const Signature sig = abc_signature();
  auto el = [&](const char* s) { return elaborate(parse_formula(s, sig), sig); };
  CHECK(equal(el("(prefsyn ee weak A B)"), f::exists_world(f::conj(f::atom("A"), f::dia_leq(f::atom("B"))))));
  CHECK(equal(el("(prefsyn ae strict A B)"), f::all_worlds(f::implies(f::atom("A"), f::dia_lt(f::atom("B"))))));
  CHECK(equal(el("(conflict p)"),
              f::conj({f::incidence(BasicValue::Freedom, f::party(Party::P)),
                       f::incidence(BasicValue::Utility, f::party(Party::P)),
                       f::incidence(BasicValue::Security, f::party(Party::P)),
                       f::incidence(BasicValue::Equality, f::party(Party::P))})));
  CHECK(equal(el("(cond A B)"),
              f::all_worlds(f::implies(
                  f::atom("A"), f::dia_leq(f::conj(f::atom("A"), f::box_leq(f::implies(f::atom("A"), f::atom("B")))))))));
  CHECK_THROWS_AS(desugar(parse_formula("(forall x contender (For x))", sig)), SemanticError);
}

TEST_CASE("elaboration leaves only core kinds and is idempotent") {
  const Signature sig = abc_signature();
  Rng rng(5);
  for (int i = 0; i < 400; ++i) {
    Formula g = random_surface_formula(rng, 4);
    Formula e = elaborate(g, sig);
    INFO(print(g));
    CHECK(is_grounded(e));
    CHECK(is_desugared(e));
    CHECK(only_core(e));
    CHECK(equal(desugar(e), e));
    CHECK(equal(elaborate(e, sig), e));
  }
}

TEST_CASE("symbol collection") {
  const Signature sig = abc_signature();
  Formula e = elaborate(parse_formula("(and A (ext STAB d) (cp-dialeq (B) (For p)))", sig), sig);
  SymbolSet s = symbols_of(e);
  CHECK(s.atoms == std::set<std::string>{"A", "B", "For(p)"});
  CHECK(s.incidence.size() == 2);
  CHECK(atom_names(e) == std::set<std::string>{"A", "B", "For"});
}
