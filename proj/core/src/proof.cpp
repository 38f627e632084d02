#include "prefkb/proof.hpp"

#include <algorithm>
#include <map>

#include "prefkb/errors.hpp"
#include "prefkb/parser.hpp"

namespace prefkb {

ProofScript parse_proof(const std::string& text, const Signature& sig) {
  ProofScript script;
  for (const SExpr& form : read_sexprs(text)) {
    if (!form.is_list || form.items.size() < 3 || !form.items[0].is_symbol("step") ||
        form.items[1].is_list) {
      throw ParseError("expected (step NAME FORMULA (uses NAME*) (bound N))", form.line, form.column);
    }
    ProofStep step;
    step.name = form.items[1].symbol;
    step.line = form.line;
    step.formula = formula_from_sexpr(form.items[2], sig);
    bool saw_uses = false;
    for (std::size_t i = 3; i < form.items.size(); ++i) {
      const SExpr& clause = form.items[i];
      if (!clause.is_list || clause.items.empty() || clause.items[0].is_list) {
        throw ParseError("expected (uses ...) or (bound N)", clause.line, clause.column);
      }
      if (clause.items[0].is_symbol("uses")) {
        saw_uses = true;
        for (std::size_t k = 1; k < clause.items.size(); ++k) {
          if (clause.items[k].is_list) throw ParseError("expected a name", clause.items[k].line, clause.items[k].column);
          step.uses.push_back(clause.items[k].symbol);
        }
      } else if (clause.items[0].is_symbol("bound")) {
        if (clause.items.size() != 2 || clause.items[1].is_list) {
          throw ParseError("expected (bound N)", clause.line, clause.column);
        }
        try {
          step.bound = std::stoi(clause.items[1].symbol);
        } catch (const std::exception&) {
          throw ParseError("bound is not a number", clause.items[1].line, clause.items[1].column);
        }
        if (step.bound < 1 || step.bound > kMaxWorlds) {
          throw ConfigError("step " + step.name + ": bound out of range");
        }
      } else {
        throw ParseError("unknown step clause " + clause.items[0].symbol, clause.line, clause.column);
      }
    }
    if (!saw_uses) throw ParseError("step " + step.name + " lacks a (uses ...) clause", form.line, form.column);
    for (const auto& earlier : script.steps) {
      if (earlier.name == step.name) throw SemanticError("duplicate step name " + step.name);
    }
    script.steps.push_back(std::move(step));
  }
  return script;
}

bool ReplayReport::passed() const {
  return std::all_of(steps.begin(), steps.end(), [](const StepResult& s) { return s.passed; });
}

const StepResult* ReplayReport::first_failure() const {
  for (const auto& s : steps) {
    if (!s.passed) return &s;
  }
  return nullptr;
}

std::string ReplayReport::render() const {
  std::string out;
  for (const auto& s : steps) {
    out += "step " + s.name + ": " + (s.passed ? "ok" : "FAILED");
    for (const auto& m : s.missing) out += " (missing " + m + ")";
    if (!s.failed_dependency.empty()) out += " (depends on failed step " + s.failed_dependency + ")";
    out += "\n  " + s.verdict.headline() + "\n";
    if (!s.passed && s.verdict.witness) {
      std::string body = render_text(*s.verdict.witness);
      std::size_t pos = 0;
      while (pos < body.size()) {
        std::size_t nl = body.find('\n', pos);
        if (nl == std::string::npos) nl = body.size();
        out += "  " + body.substr(pos, nl - pos) + "\n";
        pos = nl + 1;
      }
    }
  }
  out += passed() ? "replay: all steps pass\n" : "replay: FAILED at step " + first_failure()->name + "\n";
  return out;
}

ReplayReport replay(const ProofScript& script, const KnowledgeBase& kb, const ReplayOptions& options,
                    Engine engine) {
  std::map<std::string, std::size_t> step_index;
  for (std::size_t i = 0; i < script.steps.size(); ++i) step_index[script.steps[i].name] = i;

  ReplayReport report;
  std::vector<Formula> claims;
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const ProofStep& step = script.steps[i];
    StepResult result;
    result.name = step.name;

    Query q;
    q.mode = QueryMode::Entail;
    q.declared_atoms = kb.sig.ground_atom_keys();
    q.bound = options.bound_cap ? std::min(step.bound, *options.bound_cap) : step.bound;
    q.frame.total = options.query.total;
    q.seed = options.query.seed;
    q.budget = options.query.budget;
    q.workers = options.query.workers;
    q.target = kb.elaborate(step.formula);

    const StepResult* inherited = nullptr;
    for (const auto& use : step.uses) {
      if (auto it = step_index.find(use); it != step_index.end()) {
        if (it->second >= i) {
          throw SemanticError("step " + step.name + " uses " + use + ", which is not an earlier step");
        }
        q.facts.push_back(claims[it->second]);
        const StepResult& dep = report.steps[it->second];
        if (!dep.passed && !inherited) inherited = &dep;
        continue;
      }
      EntryKind kind;
      const KbEntry* entry = kb.find(use, &kind);
      if (!entry) {
        result.missing.push_back(use);
        continue;
      }
      Formula f = kb.elaborate(entry->formula);
      if (kind == EntryKind::Axiom) {
        q.axioms.push_back(f);
      } else {
        q.facts.push_back(f);
      }
    }

    if (inherited) {
      result.passed = false;
      result.failed_dependency = inherited->failed_dependency.empty() ? inherited->name
                                                                      : inherited->failed_dependency;
      result.verdict = inherited->verdict;
    } else {
      result.verdict = check(q, engine);
      result.passed = result.verdict.kind == VerdictKind::BoundedValid;
    }
    claims.push_back(q.target);
    report.steps.push_back(std::move(result));
  }
  return report;
}

}  // namespace prefkb
