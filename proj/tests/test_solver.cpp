#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "oracle.hpp"
#include "prefkb/elaborate.hpp"
#include "prefkb/errors.hpp"
#include "prefkb/parser.hpp"
#include "prefkb/solver.hpp"

using namespace prefkb;
using namespace prefkb::testing;

namespace {

bool brute_sat(const CnfInstance& cnf) {
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << cnf.num_vars); ++a) {
    bool ok = true;
    for (const auto& c : cnf.clauses) {
      bool sat = false;
      for (int lit : c) {
        bool val = (a >> (std::abs(lit) - 1)) & 1U;
        sat = sat || (lit > 0 ? val : !val);
      }
      ok = ok && sat;
      if (!ok) break;
    }
    if (ok) return true;
  }
  return false;
}

bool model_satisfies(const CnfInstance& cnf, const std::vector<bool>& model) {
  for (const auto& c : cnf.clauses) {
    bool sat = false;
    for (int lit : c) sat = sat || (lit > 0 ? model[lit] : !model[-lit]);
    if (!sat) return false;
  }
  return true;
}

CnfInstance pigeonhole(int pigeons, int holes) {
  CnfInstance cnf;
  auto var = [&](int p, int h) { return p * holes + h + 1; };
  cnf.num_vars = pigeons * holes;
  for (int p = 0; p < pigeons; ++p) {
    std::vector<int> c;
    for (int h = 0; h < holes; ++h) c.push_back(var(p, h));
    cnf.add(c);
  }
  for (int h = 0; h < holes; ++h) {
    for (int p = 0; p < pigeons; ++p) {
      for (int q = p + 1; q < pigeons; ++q) cnf.add({-var(p, h), -var(q, h)});
    }
  }
  return cnf;
}

Formula parse(const char* s) {
  static const Signature sig = abc_signature();
  return elaborate(parse_formula(s, sig), sig);
}

Query refute(const char* target, int bound = 4) {
  Query q;
  q.mode = QueryMode::Refute;
  q.target = parse(target);
  q.bound = bound;
  return q;
}

}  // namespace

TEST_CASE("sat solver basics") {
  CnfInstance empty;
  CHECK(sat_solve(empty).status == SatStatus::Sat);
  CnfInstance contra;
  contra.num_vars = 1;
  contra.add({1});
  contra.add({-1});
  CHECK(sat_solve(contra).status == SatStatus::Unsat);
  CnfInstance empty_clause;
  empty_clause.num_vars = 2;
  empty_clause.add({});
  CHECK(sat_solve(empty_clause).status == SatStatus::Unsat);
  CHECK(sat_solve(pigeonhole(3, 2)).status == SatStatus::Unsat);
  CHECK(sat_solve(pigeonhole(6, 5)).status == SatStatus::Unsat);
  SatResult r = sat_solve(pigeonhole(4, 4));
  REQUIRE(r.status == SatStatus::Sat);
  CHECK(model_satisfies(pigeonhole(4, 4), r.model));
}

TEST_CASE("sat solver agrees with brute force on random 3-CNF") {
  Rng rng(77);
  for (int i = 0; i < 400; ++i) {
    CnfInstance cnf;
    cnf.num_vars = uniform(rng, 1, 12);
    const int clauses = uniform(rng, 1, cnf.num_vars * 5);
    for (int c = 0; c < clauses; ++c) {
      std::vector<int> cl;
      for (int k = uniform(rng, 1, 3); k > 0; --k) {
        int v = uniform(rng, 1, cnf.num_vars);
        cl.push_back(coin(rng) ? v : -v);
      }
      cnf.add(cl);
    }
    const bool expected = brute_sat(cnf);
    for (std::uint64_t seed : {0ULL, 5ULL}) {
      SatResult r = sat_solve(cnf, seed);
      CHECK((r.status == SatStatus::Sat) == expected);
      if (r.status == SatStatus::Sat) CHECK(model_satisfies(cnf, r.model));
    }
  }
}

TEST_CASE("sat conflict budget yields unknown") {
  SatBudget b;
  b.max_conflicts = 1;
  CHECK(sat_solve(pigeonhole(8, 7), 0, b).status == SatStatus::Unknown);
}

TEST_CASE("preorder enumeration counts match an independent filter") {
  for (int n = 1; n <= 3; ++n) {
    for (bool total : {false, true}) {
      auto a = enumerate_preorders(n, total);
      auto b = ref_preorders(n, total);
      CHECK(a.size() == b.size());
      for (const auto& r : a) CHECK(std::find(b.begin(), b.end(), r) != b.end());
    }
  }
  CHECK(enumerate_preorders(1).size() == 1);
  CHECK(enumerate_preorders(2).size() == 4);
  CHECK(enumerate_preorders(3).size() == 29);
  CHECK(enumerate_preorders(4).size() == 355);
  CHECK(enumerate_preorders(3, true).size() == 13);
}

TEST_CASE("encoding layout") {
  Query q = refute("(implies (boxleq A) (and A (val SECURITY d)))");
  Encoding e = encode(q, 3);
  CHECK(e.n == 3);
  CHECK(e.rel.size() == 3);
  CHECK(e.rel[0][0] == 0);
  CHECK(e.rel[0][1] == 1);
  CHECK(e.atom_keys == std::vector<std::string>{"A"});
  CHECK(e.atom_vars[0].size() == 3);
  CHECK(e.incidence_symbols.size() == 1);
  CHECK(e.cnf.num_vars > 6 + 3 + 3);
}

TEST_CASE("check: fixed examples") {
  Verdict t = check(refute("(implies (boxleq A) A)"));
  CHECK(t.kind == VerdictKind::BoundedValid);
  CHECK(t.bound_reached == 4);
  CHECK(t.headline() == "BOUNDED-VALID (no countermodel up to 4 worlds)");

  Verdict lt = check(refute("(implies (boxlt A) A)"));
  REQUIRE(lt.kind == VerdictKind::Countermodel);
  REQUIRE(lt.witness);
  CHECK(lt.witness->size() == 1);
  CHECK(lt.headline() == "COUNTERMODEL (1 world, fails at w0)");

  Query sat;
  sat.mode = QueryMode::FindModel;
  sat.target = parse("(dialt A)");
  Verdict s = check(sat);
  REQUIRE(s.kind == VerdictKind::Satisfiable);
  CHECK(s.witness->size() == 2);
  CHECK(s.headline() == "SATISFIABLE (2 worlds)");

  Query unsat = sat;
  unsat.target = parse("(and A (not A))");
  unsat.bound = 3;
  Verdict u = check(unsat);
  CHECK(u.kind == VerdictKind::Unsatisfiable);
  CHECK(u.headline() == "UNSATISFIABLE (no model up to 3 worlds)");

  Query ent;
  ent.mode = QueryMode::Entail;
  ent.axioms = {parse("(implies A B)")};
  ent.facts = {parse("(dialeq A)")};
  ent.target = parse("(dialeq B)");
  CHECK(check(ent).kind == VerdictKind::BoundedValid);
  ent.axioms.clear();
  CHECK(check(ent).kind == VerdictKind::Countermodel);

  Query tot = refute("(or (prefsyn ee weak A B) (prefsyn ee weak B A) (not (E A)) (not (E B)))", 3);
  CHECK(check(tot).kind == VerdictKind::Countermodel);
  tot.frame.total = true;
  CHECK(check(tot).kind == VerdictKind::BoundedValid);
}

TEST_CASE("query validation") {
  Query q = refute("A");
  q.bound = 0;
  CHECK_THROWS_AS(check(q), ConfigError);
  q.bound = 63;
  CHECK_THROWS_AS(check(q), ConfigError);
  q.bound = 2;
  q.frame.serial = true;
  CHECK_THROWS_AS(check(q), ConfigError);
  Query raw;
  raw.target = f::cond(f::atom("A"), f::atom("B"));
  CHECK_THROWS_AS(check(raw), SemanticError);
  CHECK_THROWS_AS(enum_oracle(refute("A"), 4), ConfigError);
}

TEST_CASE("witnesses satisfy the query under the reference evaluator") {
  Rng rng(31);
  for (int i = 0; i < 150; ++i) {
    Query q = random_query(rng, 3);
    Verdict v = check(q);
    if (!v.witness) continue;
    const PreferenceModel& m = *v.witness;
    CHECK_FALSE(validate_model(m).has_value());
    CHECK(witness_ok(q, m));
    for (const auto& a : q.axioms) {
      for (int w = 0; w < m.size(); ++w) CHECK(ref_holds(a, m, w));
    }
    for (const auto& fct : q.facts) CHECK(ref_holds(fct, m, 0));
    const bool target = q.target ? ref_holds(q.target, m, 0) : true;
    CHECK(target == (q.mode == QueryMode::FindModel));
    for (const auto& key : q.declared_atoms) CHECK(m.atom(key) != nullptr);
  }
}

TEST_CASE("sat and enum engines agree on random queries at bound 3") {
  Rng rng(2025);
  for (int i = 0; i < 200; ++i) {
    Query q = random_query(rng, 3);
    Verdict a = check(q, Engine::Sat);
    Verdict b = check(q, Engine::Enum);
    INFO("query " << i << " target " << print(q.target));
    CHECK(a.kind == b.kind);
    CHECK(a.bound_reached == b.bound_reached);
    CHECK(a.witness.has_value() == b.witness.has_value());
    if (a.witness && b.witness) CHECK(a.witness->size() == b.witness->size());
  }
}

TEST_CASE("determinism, seeds and workers") {
  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    Query q = random_query(rng, 4);
    Verdict a = check(q);
    Verdict b = check(q);
    CHECK(a.render() == b.render());
    Query seeded = q;
    seeded.seed = 99;
    CHECK(check(seeded).kind == a.kind);
    Query parallel = q;
    parallel.workers = 3;
    Verdict c = check(parallel);
    CHECK(c.kind == a.kind);
    CHECK(c.bound_reached == a.bound_reached);
    if (a.witness) CHECK(c.witness->size() == a.witness->size());
  }
}

TEST_CASE("exhausted budget gives unknown") {
  Query q = refute("(implies (and (dialt A) (dialt B) (dialt C)) (dialt (and A B C)))", 12);
  q.budget.conflicts = 1;
  Verdict v = check(q);
  CHECK(v.kind == VerdictKind::Unknown);
  CHECK(v.bound_reached < 12);
  CHECK(v.headline().rfind("UNKNOWN", 0) == 0);
}
