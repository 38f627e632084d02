#include "prefkb/kb.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "prefkb/elaborate.hpp"
#include "prefkb/errors.hpp"
#include "prefkb/parser.hpp"

namespace prefkb {

namespace {

std::string where(const SExpr& e) {
  return std::to_string(e.line) + ":" + std::to_string(e.column) + ": ";
}

[[noreturn]] void bad_form(const SExpr& e, const std::string& msg) {
  throw ParseError(msg, e.line, e.column);
}

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  }
  return true;
}

const std::string& symbol_at(const SExpr& form, std::size_t i, const char* what) {
  if (i >= form.items.size() || form.items[i].is_list) bad_form(form, std::string("expected ") + what);
  return form.items[i].symbol;
}

std::vector<KbEntry>& list_of(KnowledgeBase& kb, EntryKind k) {
  switch (k) {
    case EntryKind::Axiom: return kb.axioms;
    case EntryKind::Fact: return kb.facts;
    case EntryKind::Goal: return kb.goals;
  }
  return kb.axioms;
}

class DocumentReader {
 public:
  DocumentReader(const KbResolver& resolve, std::vector<std::string>& stack)
      : resolve_(resolve), stack_(stack) {}

  KnowledgeBase read(const std::string& text, const std::string& name) {
    KnowledgeBase kb;
    kb.name = name;
    for (const SExpr& form : read_sexprs(text)) {
      if (!form.is_list || form.items.empty() || form.items[0].is_list) {
        bad_form(form, "expected a top-level form such as (axiom NAME FORMULA)");
      }
      const std::string& head = form.items[0].symbol;
      if (head == "sort") {
        const std::string& sort = symbol_at(form, 1, "a sort name");
        std::vector<std::string> consts;
        for (std::size_t i = 2; i < form.items.size(); ++i) consts.push_back(symbol_at(form, i, "a constant"));
        if (consts.empty()) bad_form(form, "sort " + sort + " needs at least one constant");
        kb.sig.add_sort(sort, consts);
      } else if (head == "atom") {
        const std::string& atom = symbol_at(form, 1, "an atom name");
        std::vector<std::string> sorts;
        for (std::size_t i = 2; i < form.items.size(); ++i) {
          const std::string& s = symbol_at(form, i, "a sort name");
          if (!kb.sig.find_sort(s)) throw SemanticError(where(form.items[i]) + "undeclared sort " + s);
          sorts.push_back(s);
        }
        kb.sig.add_atom(atom, sorts);
      } else if (head == "axiom" || head == "fact" || head == "goal") {
        if (form.items.size() != 3) bad_form(form, "expected (" + head + " NAME FORMULA)");
        const std::string& entry = symbol_at(form, 1, "an entry name");
        if (!valid_name(entry)) bad_form(form.items[1], "invalid entry name " + entry);
        Formula f = formula_from_sexpr(form.items[2], kb.sig);
        EntryKind kind = head == "axiom" ? EntryKind::Axiom : head == "fact" ? EntryKind::Fact : EntryKind::Goal;
        if (kb.find(entry)) throw SemanticError(where(form) + "duplicate entry name " + entry);
        kb.add(kind, {entry, f});
      } else if (head == "option") {
        if (form.items.size() != 3) bad_form(form, "expected (option KEY VALUE)");
        option(kb, form, symbol_at(form, 1, "an option key"), symbol_at(form, 2, "an option value"));
      } else if (head == "import") {
        if (form.items.size() != 2) bad_form(form, "expected (import NAME)");
        const std::string& target = symbol_at(form, 1, "a KB name");
        import(kb, form, target);
      } else {
        bad_form(form.items[0], "unknown top-level form " + head);
      }
    }
    return kb;
  }

 private:
  void import(KnowledgeBase& kb, const SExpr& form, const std::string& target) {
    for (const auto& open : stack_) {
      if (open == target) throw SemanticError(where(form) + "import cycle through " + target);
    }
    std::optional<std::string> text = resolve_ ? resolve_(target) : std::nullopt;
    if (!text) throw SemanticError(where(form) + "cannot resolve import " + target);
    stack_.push_back(target);
    KnowledgeBase sub = read(*text, target);
    stack_.pop_back();
    kb.merge(sub);
    kb.imports.push_back(target);
  }

  static void option(KnowledgeBase& kb, const SExpr& form, const std::string& key, const std::string& value) {
    auto as_bool = [&]() {
      if (value == "true") return true;
      if (value == "false") return false;
      throw ConfigError(where(form) + "option " + key + " expects true or false");
    };
    auto as_number = [&]() -> std::uint64_t {
      try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
      } catch (const std::exception&) {
        throw ConfigError(where(form) + "option " + key + " expects a number");
      }
    };
    if (key == "bound") {
      std::uint64_t b = as_number();
      if (b < 1 || b > static_cast<std::uint64_t>(kMaxWorlds)) {
        throw ConfigError(where(form) + "bound must lie in [1, " + std::to_string(kMaxWorlds) + "]");
      }
      kb.options.bound = static_cast<int>(b);
    } else if (key == "total") {
      kb.options.total = as_bool();
    } else if (key == "seed") {
      kb.options.seed = as_number();
    } else if (key == "serial") {
      FrameOptions frame;
      frame.serial = as_bool();
      check_frame_options(frame);
    } else {
      throw ConfigError(where(form) + "unknown option " + key);
    }
  }

  const KbResolver& resolve_;
  std::vector<std::string>& stack_;
};

Formula conflict_target(Party x) { return desugar(f::conflict(f::party(x))); }

}  // namespace

void KnowledgeBase::add(EntryKind kind, KbEntry entry) {
  if (find(entry.name)) throw SemanticError("duplicate entry name " + entry.name);
  list_of(*this, kind).push_back(std::move(entry));
}

void KnowledgeBase::merge(const KnowledgeBase& other) {
  sig.merge(other.sig);
  for (EntryKind kind : {EntryKind::Axiom, EntryKind::Fact, EntryKind::Goal}) {
    const auto& src = kind == EntryKind::Axiom ? other.axioms : kind == EntryKind::Fact ? other.facts : other.goals;
    for (const auto& e : src) {
      EntryKind have_kind;
      if (const KbEntry* have = find(e.name, &have_kind)) {
        if (have_kind == kind && equal(have->formula, e.formula)) continue;
        throw SemanticError("conflicting definitions of entry " + e.name + " while merging " + other.name);
      }
      add(kind, e);
    }
  }
  for (const auto& i : other.imports) {
    if (std::find(imports.begin(), imports.end(), i) == imports.end()) imports.push_back(i);
  }
  if (!options.bound) options.bound = other.options.bound;
  if (!options.total) options.total = other.options.total;
  if (!options.seed) options.seed = other.options.seed;
}

bool KnowledgeBase::remove(const std::string& entry_name) {
  for (auto* list : {&axioms, &facts, &goals}) {
    for (auto it = list->begin(); it != list->end(); ++it) {
      if (it->name == entry_name) {
        list->erase(it);
        return true;
      }
    }
  }
  return false;
}

const KbEntry* KnowledgeBase::find(const std::string& entry_name, EntryKind* kind) const {
  for (EntryKind k : {EntryKind::Axiom, EntryKind::Fact, EntryKind::Goal}) {
    const auto& list = k == EntryKind::Axiom ? axioms : k == EntryKind::Fact ? facts : goals;
    for (const auto& e : list) {
      if (e.name == entry_name) {
        if (kind) *kind = k;
        return &e;
      }
    }
  }
  return nullptr;
}

Formula KnowledgeBase::elaborate(const Formula& f) const { return prefkb::elaborate(f, sig); }

std::vector<Formula> KnowledgeBase::elaborated(EntryKind kind) const {
  const auto& list = kind == EntryKind::Axiom ? axioms : kind == EntryKind::Fact ? facts : goals;
  std::vector<Formula> out;
  for (const auto& e : list) out.push_back(elaborate(e.formula));
  return out;
}

KbResolver builtin_resolver() {
  return [](const std::string& name) { return builtin_file(name + ".kb"); };
}

KnowledgeBase parse_kb(const std::string& text, const std::string& name, const KbResolver& resolve) {
  std::vector<std::string> stack{name};
  DocumentReader reader(resolve, stack);
  KnowledgeBase kb = reader.read(text, name);
  // Every entry must elaborate.
  for (EntryKind k : {EntryKind::Axiom, EntryKind::Fact, EntryKind::Goal}) kb.elaborated(k);
  return kb;
}

KnowledgeBase load_kb_file(const std::string& path) {
  namespace fs = std::filesystem;
  auto slurp = [](const fs::path& p) -> std::optional<std::string> {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  fs::path p(path);
  std::optional<std::string> text = slurp(p);
  if (!text) throw ConfigError("cannot read " + path);
  fs::path dir = p.parent_path();
  KbResolver resolve = [dir, slurp](const std::string& name) -> std::optional<std::string> {
    if (auto local = slurp(dir / (name + ".kb"))) return local;
    return builtin_file(name + ".kb");
  };
  return parse_kb(*text, p.stem().string(), resolve);
}

namespace {
KnowledgeBase builtin_kb(const std::string& name) {
  auto text = builtin_file(name + ".kb");
  if (!text) throw ConfigError("missing shipped case file " + name + ".kb");
  return parse_kb(*text, name);
}
}  // namespace

KnowledgeBase default_general_knowledge() { return builtin_kb("general"); }
KnowledgeBase case_pierson() { return builtin_kb("pierson"); }
KnowledgeBase case_post() { return builtin_kb("post"); }
KnowledgeBase case_conti() { return builtin_kb("conti"); }

QueryOptions resolve_options(const KnowledgeBase& kb, const QueryOptions& base, bool bound_given,
                             bool total_given, bool seed_given) {
  QueryOptions o = base;
  if (!bound_given && kb.options.bound) o.bound = *kb.options.bound;
  if (!total_given && kb.options.total) o.total = *kb.options.total;
  if (!seed_given && kb.options.seed) o.seed = *kb.options.seed;
  return o;
}

namespace {
Query base_query(const KnowledgeBase& kb, const QueryOptions& o) {
  Query q;
  q.axioms = kb.elaborated(EntryKind::Axiom);
  q.declared_atoms = kb.sig.ground_atom_keys();
  q.bound = o.bound;
  q.frame.total = o.total;
  q.seed = o.seed;
  q.budget = o.budget;
  q.workers = o.workers;
  return q;
}
}  // namespace

Query entail_query(const KnowledgeBase& kb, const Formula& goal, const QueryOptions& o) {
  Query q = base_query(kb, o);
  q.mode = QueryMode::Entail;
  q.facts = kb.elaborated(EntryKind::Fact);
  q.target = kb.elaborate(goal);
  return q;
}

Query validity_query(const KnowledgeBase& kb, const Formula& goal, const QueryOptions& o) {
  Query q = base_query(kb, o);
  q.mode = QueryMode::Refute;
  q.target = kb.elaborate(goal);
  return q;
}

Query model_query(const KnowledgeBase& kb, const QueryOptions& o, const Formula& extra) {
  Query q = base_query(kb, o);
  q.mode = QueryMode::FindModel;
  q.facts = kb.elaborated(EntryKind::Fact);
  q.target = extra ? kb.elaborate(extra) : f::top();
  return q;
}

Formula nontrivial_requirement() { return f::exists_world(f::dia_lt(f::top())); }

bool ConflictReport::any_entailed() const {
  for (const auto& x : findings) {
    if (x.entailed) return true;
  }
  return false;
}

std::string ConflictReport::render() const {
  std::string out;
  for (const auto& x : findings) {
    out += "Conflict(" + std::string(party_name(x.party)) + "): ";
    if (x.entailed) {
      out += "entailed, " + x.verdict.headline() + "\n";
    } else {
      out += "not entailed, " + x.verdict.render();
    }
  }
  return out;
}

ConflictReport conflict_audit(const KnowledgeBase& kb, const QueryOptions& o, Engine engine) {
  ConflictReport report;
  for (Party x : {Party::P, Party::D}) {
    Query q = base_query(kb, o);
    q.mode = QueryMode::Entail;
    q.facts = kb.elaborated(EntryKind::Fact);
    q.target = conflict_target(x);
    ConflictFinding finding{x, false, check(q, engine)};
    finding.entailed = finding.verdict.kind == VerdictKind::BoundedValid;
    report.findings.push_back(std::move(finding));
  }
  return report;
}

}  // namespace prefkb
