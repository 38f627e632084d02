#include <benchmark/benchmark.h>

#include <random>

#include "prefkb/elaborate.hpp"
#include "prefkb/eval.hpp"
#include "prefkb/kb.hpp"
#include "prefkb/parser.hpp"
#include "prefkb/sat.hpp"
#include "prefkb/solver.hpp"

using namespace prefkb;

namespace {

PreferenceModel chain_model(int n) {
  PreferenceModel m(n);
  for (int w = 0; w < n; ++w) {
    for (int v = w; v < n; ++v) m.set_leq(w, v);
  }
  std::mt19937_64 rng(1);
  m.set_atom("A", Extension(n, rng() & Extension::full_mask(n)));
  m.set_atom("B", Extension(n, rng() & Extension::full_mask(n)));
  return m;
}

Signature ab() {
  Signature s;
  s.add_atom("A", {});
  s.add_atom("B", {});
  return s;
}

void BM_Eval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PreferenceModel m = chain_model(n);
  Signature sig = ab();
  Formula g = elaborate(parse_formula("(and (cond A B) (prefsyn ae strict A (or A B)) (boxlt (dialeq (not B))))", sig), sig);
  for (auto _ : state) benchmark::DoNotOptimize(eval(g, m));
}
BENCHMARK(BM_Eval)->Arg(8)->Arg(32)->Arg(62);

CnfInstance pigeonhole(int pigeons, int holes) {
  CnfInstance cnf;
  cnf.num_vars = pigeons * holes;
  auto var = [&](int p, int h) { return p * holes + h + 1; };
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

void BM_SatPigeonhole(benchmark::State& state) {
  const int holes = static_cast<int>(state.range(0));
  CnfInstance cnf = pigeonhole(holes + 1, holes);
  for (auto _ : state) benchmark::DoNotOptimize(sat_solve(cnf).status);
}
BENCHMARK(BM_SatPigeonhole)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_SatRandom3Cnf(benchmark::State& state) {
  const int vars = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  CnfInstance cnf;
  cnf.num_vars = vars;
  std::uniform_int_distribution<int> pick(1, vars);
  for (int c = 0; c < vars * 426 / 100; ++c) {
    std::vector<int> cl;
    for (int k = 0; k < 3; ++k) cl.push_back(rng() & 1U ? pick(rng) : -pick(rng));
    cnf.add(cl);
  }
  for (auto _ : state) benchmark::DoNotOptimize(sat_solve(cnf).status);
}
BENCHMARK(BM_SatRandom3Cnf)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_CaseEntailment(benchmark::State& state) {
  KnowledgeBase kb = case_pierson();
  QueryOptions o;
  o.bound = static_cast<int>(state.range(0));
  Query q = entail_query(kb, kb.goals.at(0).formula, o);
  for (auto _ : state) benchmark::DoNotOptimize(check(q).kind);
}
BENCHMARK(BM_CaseEntailment)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CaseEntailmentEnum(benchmark::State& state) {
  KnowledgeBase kb = case_post();
  QueryOptions o;
  o.bound = 2;
  Query q = entail_query(kb, kb.goals.at(0).formula, o);
  for (auto _ : state) benchmark::DoNotOptimize(check(q, Engine::Enum).kind);
}
BENCHMARK(BM_CaseEntailmentEnum)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
