#include "prefkb/suites.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "prefkb/elaborate.hpp"
#include "prefkb/errors.hpp"
#include "prefkb/kb.hpp"
#include "prefkb/parser.hpp"
#include "prefkb/proof.hpp"

namespace prefkb {

namespace {

// A verdict query with its expected outcome. `min_worlds` is the size of the
// smallest witness for refutations and model searches, `max_witness` an
// upper limit the witness must respect (0: none).
struct QueryItem {
  std::string name;
  std::function<Query(int bound)> make;
  VerdictKind expected;
  int bound = 4;
  int min_worlds = 1;
  int max_witness = 0;
};

// Items that are not a single query (proof replay).
struct CustomItem {
  std::string name;
  std::function<SuiteItem(const SuiteConfig&)> run;
};

struct Suite {
  std::vector<QueryItem> queries;
  std::vector<CustomItem> custom;
};

const Signature& generic_signature() {
  static const Signature sig = [] {
    Signature s;
    for (const char* a : {"A", "B", "C"}) s.add_atom(a, {});
    return s;
  }();
  return sig;
}

QueryItem formula_item(std::string name, const std::string& text, QueryMode mode, VerdictKind expected,
                       int min_worlds = 1, int max_witness = 0) {
  QueryItem item;
  item.name = std::move(name);
  item.expected = expected;
  item.min_worlds = min_worlds;
  item.max_witness = max_witness;
  item.make = [text, mode](int bound) {
    const Signature& sig = generic_signature();
    Query q;
    q.mode = mode;
    q.target = elaborate(parse_formula(text, sig), sig);
    q.bound = bound;
    return q;
  };
  return item;
}

QueryItem valid(std::string name, const std::string& text) {
  return formula_item(std::move(name), text, QueryMode::Refute, VerdictKind::BoundedValid);
}

QueryItem refuted(std::string name, const std::string& text, int min_worlds, int max_witness) {
  return formula_item(std::move(name), text, QueryMode::Refute, VerdictKind::Countermodel, min_worlds,
                      max_witness);
}

QueryItem satisfiable(std::string name, const std::string& text) {
  return formula_item(std::move(name), text, QueryMode::FindModel, VerdictKind::Satisfiable);
}

Suite meta_suite() {
  Suite s;
  s.queries = {
      valid("dual-leq", "(iff (dialeq A) (not (boxleq (not A))))"),
      valid("dual-lt", "(iff (dialt A) (not (boxlt (not A))))"),
      valid("dual-global", "(iff (E A) (not (A (not A))))"),
      valid("T-leq", "(implies (boxleq A) A)"),
      valid("4-leq", "(implies (boxleq A) (boxleq (boxleq A)))"),
      valid("4-lt", "(implies (boxlt A) (boxlt (boxlt A)))"),
      valid("inclusion", "(implies (dialt A) (dialeq A))"),
      refuted("T-lt", "(implies (boxlt A) A)", 1, 1),
      valid("lt-then-leq", "(implies (dialeq (dialt A)) (dialt A))"),
      valid("global-rigid", "(implies (E A) (A (E A)))"),
      valid("ae-strict-weak", "(implies (prefsyn ae strict A B) (prefsyn ae weak A B))"),
      refuted("ee-weak-intransitive",
              "(implies (and (prefsyn ee weak A B) (prefsyn ee weak B C)) (prefsyn ee weak A C))", 2, 3),
      refuted("ee-strict-intransitive",
              "(implies (and (prefsyn ee strict A B) (prefsyn ee strict B C)) (prefsyn ee strict A C))", 3,
              3),
      valid("cond-identity", "(cond A A)"),
      valid("cp-empty", "(iff (cp-dialeq () A) (dialeq A))"),
      valid("cp-restricts", "(implies (cp-dialt (B) A) (dialt A))"),
      refuted("cp-converse", "(implies (dialt A) (cp-dialt (B) A))", 2, 2),
  };
  return s;
}

Suite values_suite() {
  Suite s;
  const std::string ae = "(prefsyn ae strict ";
  s.queries = {
      valid("right-aggregation", "(implies " + ae + "A B) " + ae + "A (or B C)))"),
      refuted("right-aggregation-converse", "(implies " + ae + "A (or B C)) " + ae + "A B))", 2, 3),
      valid("left-aggregation", "(implies " + ae + "(or A C) B) " + ae + "A B))"),
      refuted("left-aggregation-converse", "(implies " + ae + "A B) " + ae + "(or A C) B))", 1, 3),
      valid("union-property", "(implies (and " + ae + "B A) " + ae + "C A)) " + ae + "(or B C) A))"),
      valid("right-aggregation-values",
            "(implies (vpref strict (ext WILL p) (ext STAB p)) "
            "(vpref strict (ext WILL p) (agg (STAB p) (RELI p))))"),
      valid("stab-extension", "(iff (ext STAB d) (and (val SECURITY d) (val UTILITY d)))"),
  };
  for (const char* x : {"p", "d"}) {
    const std::string px(x);
    s.queries.push_back(valid("conflict-resp-stab-" + px,
                              "(implies (and (ext RESP " + px + ") (ext STAB " + px + ")) (conflict " + px + "))"));
    s.queries.push_back(valid("conflict-reli-will-" + px,
                              "(implies (and (ext RELI " + px + ") (ext WILL " + px + ")) (conflict " + px + "))"));
    s.queries.push_back(refuted("no-conflict-will-stab-" + px,
                                "(implies (and (ext WILL " + px + ") (ext STAB " + px + ")) (conflict " + px + "))",
                                1, 2));
  }
  s.queries.push_back(refuted("no-conflict-cross-party",
                              "(implies (and (ext RESP p) (ext STAB d)) (conflict p))", 1, 2));
  s.queries.push_back(satisfiable("conflict-satisfiable", "(conflict p)"));
  s.queries.push_back(refuted("conflict-refutable", "(conflict p)", 1, 1));
  s.queries.push_back(satisfiable("conflict-no-explosion", "(and (conflict p) (not A))"));
  return s;
}

QueryItem kb_item(std::string name, std::function<KnowledgeBase()> load, VerdictKind expected, int bound,
                  std::function<Query(const KnowledgeBase&, const QueryOptions&)> build, int min_worlds = 1) {
  QueryItem item;
  item.name = std::move(name);
  item.expected = expected;
  item.bound = bound;
  item.min_worlds = min_worlds;
  item.make = [load, build](int b) {
    QueryOptions o;
    o.bound = b;
    return build(load(), o);
  };
  return item;
}

SuiteItem replay_item(const std::string& name, const SuiteConfig& config, const std::vector<std::string>& removed,
                      const std::vector<std::string>& expect_failed) {
  SuiteItem item;
  item.name = name;
  KnowledgeBase kb = case_pierson();
  for (const auto& r : removed) kb.remove(r);
  ProofScript script = parse_proof(*builtin_file("pierson.proof"), kb.sig);
  ReplayOptions options;
  options.bound_cap = config.bound_cap;
  options.query.seed = config.seed;
  options.query.total = config.total;
  options.query.budget.seconds = config.budget_seconds;
  options.query.workers = config.workers;

  auto summary = [](const ReplayReport& r) {
    std::string failed;
    for (const auto& s : r.steps) {
      if (!s.passed) failed += (failed.empty() ? "" : ",") + s.name;
    }
    return failed.empty() ? std::string("all steps pass") : "failed: " + failed;
  };
  std::string want;
  for (const auto& s : expect_failed) want += (want.empty() ? "" : ",") + s;
  item.expected = want.empty() ? "all steps pass" : "failed: " + want;

  std::vector<Engine> engines;
  if (config.engine != EngineChoice::Enum) engines.push_back(Engine::Sat);
  if (config.engine != EngineChoice::Sat) engines.push_back(Engine::Enum);
  std::vector<ReplayReport> reports;
  for (Engine e : engines) reports.push_back(replay(script, kb, options, e));

  item.actual = summary(reports[0]);
  if (reports.size() == 2 && summary(reports[1]) != item.actual) {
    item.disagreement = true;
    item.detail = "sat engine:\n" + reports[0].render() + "enum engine:\n" + reports[1].render();
  }
  item.passed = !item.disagreement && item.actual == item.expected;
  if (!item.passed && item.detail.empty()) item.detail = reports[0].render();
  return item;
}

Suite cases_suite() {
  Suite s;
  struct CaseInfo {
    const char* name;
    std::function<KnowledgeBase()> load;
  };
  const std::vector<CaseInfo> cases = {
      {"pierson", case_pierson}, {"post", case_post}, {"conti", case_conti}};
  auto entail_goal = [](const KnowledgeBase& kb, const QueryOptions& o) {
    return entail_query(kb, kb.goals.at(0).formula, o);
  };
  auto nontrivial = [](const KnowledgeBase& kb, const QueryOptions& o) {
    return model_query(kb, o, nontrivial_requirement());
  };
  s.queries.push_back(kb_item("general-satisfiable", default_general_knowledge, VerdictKind::Satisfiable, 4,
                              [](const KnowledgeBase& kb, const QueryOptions& o) { return model_query(kb, o); }));
  for (const char* x : {"p", "d"}) {
    const std::string px(x);
    s.queries.push_back(kb_item("general-open-for-" + px, default_general_knowledge, VerdictKind::Countermodel, 3,
                                [px](const KnowledgeBase& kb, const QueryOptions& o) {
                                  return validity_query(kb, parse_formula("(For " + px + ")", kb.sig), o);
                                }));
  }
  for (const auto& c : cases) {
    const std::string n(c.name);
    s.queries.push_back(kb_item(n + "-entails-goal", c.load, VerdictKind::BoundedValid, 4, entail_goal));
    s.queries.push_back(kb_item(n + "-nontrivial-model", c.load, VerdictKind::Satisfiable, 4, nontrivial, 2));
    for (Party x : {Party::P, Party::D}) {
      const std::string px(party_name(x));
      s.queries.push_back(kb_item(n + "-no-conflict-" + px, c.load, VerdictKind::Countermodel, 4,
                                  [x](const KnowledgeBase& kb, const QueryOptions& o) {
                                    return entail_query(kb, f::conflict(f::party(x)), o);
                                  }));
    }
  }
  s.custom.push_back({"pierson-replay", [](const SuiteConfig& c) {
                        return replay_item("pierson-replay", c, {}, {});
                      }});
  s.custom.push_back({"pierson-replay-without-R2", [](const SuiteConfig& c) {
                        return replay_item("pierson-replay-without-R2", c, {"R2"}, {"s2", "s3", "s7", "s8"});
                      }});
  return s;
}

Suite suite_by_name(const std::string& name) {
  if (name == "meta") return meta_suite();
  if (name == "values") return values_suite();
  if (name == "cases") return cases_suite();
  throw ConfigError("unknown suite " + name + " (expected meta, values or cases)");
}

std::string verdict_brief(const Verdict& v) {
  std::string out(verdict_kind_name(v.kind));
  if (v.witness) out += "/" + std::to_string(v.witness->size());
  return out;
}

SuiteItem run_query_item(const QueryItem& qi, const SuiteConfig& config) {
  SuiteItem item;
  item.name = qi.name;
  item.expected = std::string(verdict_kind_name(qi.expected));
  const int bound = config.bound_cap ? std::min(qi.bound, *config.bound_cap) : qi.bound;
  if (qi.expected != VerdictKind::BoundedValid && qi.expected != VerdictKind::Unsatisfiable &&
      qi.min_worlds > bound) {
    item.skipped = true;
    item.passed = true;
    item.actual = "skipped (needs " + std::to_string(qi.min_worlds) + " worlds)";
    return item;
  }
  Query q = qi.make(bound);
  q.seed = config.seed;
  q.frame.total = q.frame.total || config.total;
  q.budget.seconds = config.budget_seconds;
  q.workers = config.workers;

  std::vector<Verdict> verdicts;
  if (config.engine != EngineChoice::Enum) verdicts.push_back(check(q, Engine::Sat));
  if (config.engine != EngineChoice::Sat) verdicts.push_back(check(q, Engine::Enum));
  const Verdict& v = verdicts[0];
  item.actual = verdict_brief(v);
  if (verdicts.size() == 2 && verdicts[1].kind != v.kind) {
    item.disagreement = true;
    item.detail = "sat engine: " + v.render() + "enum engine: " + verdicts[1].render();
    for (const auto& f : q.axioms) item.detail += "axiom " + print(f) + "\n";
    for (const auto& f : q.facts) item.detail += "fact " + print(f) + "\n";
    item.detail += "target " + print(q.target) + "\n";
  }
  bool ok = v.kind == qi.expected;
  if (ok && qi.max_witness > 0 && v.witness && v.witness->size() > qi.max_witness) ok = false;
  item.passed = ok && !item.disagreement;
  if (!item.passed && item.detail.empty()) item.detail = v.render();
  return item;
}

}  // namespace

std::vector<std::string> suite_names() { return {"meta", "values", "cases"}; }

bool SuiteReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const SuiteItem& i) { return i.passed; });
}

int SuiteReport::disagreements() const {
  return static_cast<int>(std::count_if(items.begin(), items.end(), [](const SuiteItem& i) { return i.disagreement; }));
}

std::string SuiteReport::render() const {
  std::ostringstream out;
  std::size_t width = 4;
  for (const auto& i : items) width = std::max(width, i.name.size());
  int pass = 0, fail = 0, skip = 0;
  for (const auto& i : items) {
    const char* tag = i.skipped ? "SKIP" : i.passed ? "PASS" : "FAIL";
    out << tag << "  " << suite << "/" << i.name << std::string(width - i.name.size() + 2, ' ')
        << "expected " << i.expected << ", got " << i.actual << "\n";
    if (!i.passed && !i.detail.empty()) {
      std::istringstream lines(i.detail);
      for (std::string line; std::getline(lines, line);) out << "      " << line << "\n";
    }
    if (i.skipped) {
      ++skip;
    } else if (i.passed) {
      ++pass;
    } else {
      ++fail;
    }
  }
  out << suite << ": " << pass << " passed, " << fail << " failed, " << skip << " skipped";
  if (int d = disagreements()) out << ", " << d << " engine disagreements";
  out << "\n";
  return out.str();
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  Suite s = suite_by_name(name);
  SuiteReport report;
  report.suite = name;
  for (const auto& q : s.queries) report.items.push_back(run_query_item(q, config));
  for (const auto& c : s.custom) report.items.push_back(c.run(config));
  return report;
}

}  // namespace prefkb
