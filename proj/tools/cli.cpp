#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "prefkb/elaborate.hpp"
#include "prefkb/errors.hpp"
#include "prefkb/kb.hpp"
#include "prefkb/proof.hpp"

namespace prefkb::cli {

namespace {

struct Outcome {
  int code = kOk;
  void raise(int c) {
    // disagreement beats usage errors beats failures
    auto rank = [](int x) { return x == kDisagreement ? 3 : x == kUsage ? 2 : x == kFailure ? 1 : 0; };
    if (rank(c) > rank(code)) code = c;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_dot(const RunConfig& c, const Verdict& v, bool& written, std::ostream& err) {
  if (c.dot_path.empty() || written || !v.witness) return;
  std::ofstream out(c.dot_path, std::ios::binary);
  if (!out) {
    err << "warning: cannot write " << c.dot_path << "\n";
    return;
  }
  out << render_dot(*v.witness);
  written = true;
}

QueryOptions query_options(const RunConfig& c, const KnowledgeBase& kb) {
  QueryOptions base;
  if (c.bound) base.bound = *c.bound;
  base.total = c.total;
  if (c.seed) base.seed = *c.seed;
  base.budget.seconds = c.budget_seconds;
  QueryOptions o = resolve_options(kb, base, c.bound.has_value(), c.total, c.seed.has_value());
  if (c.engine != EngineChoice::Sat && o.bound > 3) {
    throw ConfigError("the enum engine supports bounds up to 3; pass --bound");
  }
  return o;
}

// Runs one query under the configured engine(s) and reports it.
Verdict run_query(const RunConfig& c, const std::string& label, const Query& q, Outcome& outcome,
                  std::ostream& out) {
  std::vector<Verdict> vs;
  if (c.engine != EngineChoice::Enum) vs.push_back(check(q, Engine::Sat));
  if (c.engine != EngineChoice::Sat) vs.push_back(check(q, Engine::Enum));
  const Verdict& v = vs[0];
  out << label << ": " << v.render();
  if (vs.size() == 2 && vs[1].kind != v.kind) {
    outcome.raise(kDisagreement);
    out << "ENGINE DISAGREEMENT on " << label << "\n"
        << "sat: " << vs[0].render() << "enum: " << vs[1].render();
    for (const auto& f : q.axioms) out << "axiom " << print(f) << "\n";
    for (const auto& f : q.facts) out << "fact " << print(f) << "\n";
    out << "target " << (q.target ? print(q.target) : "true") << "\n";
  }
  if (v.kind == VerdictKind::Unknown) {
    outcome.raise(kUsage);
  } else if (!v.positive()) {
    outcome.raise(kFailure);
  }
  return v;
}

int goals_command(const RunConfig& c, std::ostream& out, std::ostream& err) {
  KnowledgeBase kb = load_kb_file(c.input);
  QueryOptions o = query_options(c, kb);
  if (kb.goals.empty()) {
    err << c.input << ": no goals to check\n";
    return kUsage;
  }
  Outcome outcome;
  bool dot_written = false;
  for (const auto& g : kb.goals) {
    Query q = c.command == "check" ? validity_query(kb, g.formula, o) : entail_query(kb, g.formula, o);
    Verdict v = run_query(c, "goal " + g.name, q, outcome, out);
    write_dot(c, v, dot_written, err);
  }
  return outcome.code;
}

int model_command(const RunConfig& c, std::ostream& out, std::ostream& err) {
  KnowledgeBase kb = load_kb_file(c.input);
  QueryOptions o = query_options(c, kb);
  Outcome outcome;
  bool dot_written = false;
  Verdict v = run_query(c, kb.name, model_query(kb, o), outcome, out);
  write_dot(c, v, dot_written, err);
  return outcome.code;
}

int replay_command(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.kb_path.empty()) throw ConfigError("replay needs --kb FILE");
  KnowledgeBase kb = load_kb_file(c.kb_path);
  ProofScript script = parse_proof(read_file(c.input), kb.sig);
  ReplayOptions options;
  options.query = query_options(c, kb);
  if (c.bound) options.bound_cap = *c.bound;
  if (c.engine != EngineChoice::Sat) options.bound_cap = std::min(options.bound_cap.value_or(3), 3);

  Outcome outcome;
  std::vector<ReplayReport> reports;
  if (c.engine != EngineChoice::Enum) reports.push_back(replay(script, kb, options, Engine::Sat));
  if (c.engine != EngineChoice::Sat) reports.push_back(replay(script, kb, options, Engine::Enum));
  const ReplayReport& r = reports[0];
  for (const auto& s : r.steps) {
    for (const auto& m : s.missing) err << "warning: step " << s.name << " cites unknown name " << m << "\n";
  }
  out << r.render();
  if (reports.size() == 2) {
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
      if (r.steps[i].passed != reports[1].steps[i].passed) {
        outcome.raise(kDisagreement);
        out << "ENGINE DISAGREEMENT on step " << r.steps[i].name << "\n" << "enum engine:\n" << reports[1].render();
        break;
      }
    }
  }
  for (const auto& s : r.steps) {
    if (s.verdict.kind == VerdictKind::Unknown) outcome.raise(kUsage);
  }
  if (!r.passed()) outcome.raise(kFailure);
  if (const StepResult* bad = r.first_failure()) {
    bool dot_written = false;
    write_dot(c, bad->verdict, dot_written, err);
  }
  return outcome.code;
}

int suite_command(const RunConfig& c, std::ostream& out) {
  SuiteConfig sc;
  sc.bound_cap = c.bound;
  sc.engine = c.engine;
  sc.total = c.total;
  sc.seed = c.seed.value_or(0);
  sc.budget_seconds = c.budget_seconds;
  if (c.engine != EngineChoice::Sat) {
    if (!sc.bound_cap || *sc.bound_cap > 3) throw ConfigError("the enum engine supports bounds up to 3; pass --bound");
  }
  SuiteReport r = run_suite(c.input, sc);
  out << r.render();
  if (r.disagreements() > 0) return kDisagreement;
  return r.passed() ? kOk : kFailure;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig c;
  CLI::App app{"Bounded reasoning over preference models and value-based legal knowledge bases", "prefkb"};
  app.require_subcommand(1);

  std::optional<int> bound;
  std::string engine = "sat";
  bool total = false;
  std::optional<std::uint64_t> seed;
  std::string dot;
  double budget = 0;
  std::string kb;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--bound", bound, "largest world count to search")->check(CLI::Range(1, kMaxWorlds));
    sub->add_option("--engine", engine, "sat, enum or both")->check(CLI::IsMember({"sat", "enum", "both"}));
    sub->add_flag("--total", total, "restrict to total preorders");
    sub->add_option("--seed", seed, "solver seed");
    sub->add_option("--dot", dot, "write the first witness as Graphviz");
    sub->add_option("--budget", budget, "time budget in seconds")->check(CLI::NonNegativeNumber);
  };

  std::string input;
  CLI::App* check_cmd = app.add_subcommand("check", "bounded validity of each goal from the axioms");
  CLI::App* entail_cmd = app.add_subcommand("entail", "bounded entailment of each goal from axioms and facts");
  CLI::App* model_cmd = app.add_subcommand("model", "find a model of axioms and facts");
  for (CLI::App* sub : {check_cmd, entail_cmd, model_cmd}) {
    sub->add_option("file", input, "knowledge base file")->required();
    common(sub);
  }
  CLI::App* replay_cmd = app.add_subcommand("replay", "replay a proof script against a knowledge base");
  replay_cmd->add_option("file", input, "proof script")->required();
  replay_cmd->add_option("--kb", kb, "knowledge base file")->required();
  common(replay_cmd);
  CLI::App* suite_cmd = app.add_subcommand("suite", "run a built-in suite");
  suite_cmd->add_option("name", input, "meta, values or cases")->required()->check(CLI::IsMember(suite_names()));
  common(suite_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  app.parse(reversed);

  c.command = app.get_subcommands().front()->get_name();
  c.input = input;
  c.kb_path = kb;
  c.bound = bound;
  c.engine = engine == "enum" ? EngineChoice::Enum : engine == "both" ? EngineChoice::Both : EngineChoice::Sat;
  c.total = total;
  c.seed = seed;
  c.dot_path = dot;
  c.budget_seconds = budget;
  return c;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.command == "check" || c.command == "entail") return goals_command(c, out, err);
    if (c.command == "model") return model_command(c, out, err);
    if (c.command == "replay") return replay_command(c, out, err);
    if (c.command == "suite") return suite_command(c, out);
    err << "unknown command " << c.command << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  try {
    c = parse_args(args);
  } catch (const CLI::CallForHelp&) {
    out << "usage: prefkb check|entail|model FILE | replay FILE.proof --kb FILE | suite meta|values|cases\n"
           "       [--bound N] [--engine sat|enum|both] [--total] [--seed N] [--dot PATH] [--budget SECS]\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return run(c, out, err);
}

}  // namespace prefkb::cli
