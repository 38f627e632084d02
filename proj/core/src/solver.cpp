#include "prefkb/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "prefkb/elaborate.hpp"
#include "prefkb/errors.hpp"
#include "prefkb/eval.hpp"
#include "prefkb/preference.hpp"

namespace prefkb {

namespace {

std::string worlds_word(int n) { return std::to_string(n) + (n == 1 ? " world" : " worlds"); }

void validate_query(const Query& q) {
  if (q.bound < 1 || q.bound > kMaxWorlds) {
    throw ConfigError("bound must lie in [1, " + std::to_string(kMaxWorlds) + "], got " +
                      std::to_string(q.bound));
  }
  check_frame_options(q.frame);
  auto core = [](const Formula& f) {
    if (!f) return;
    if (!is_grounded(f) || !is_desugared(f)) {
      throw SemanticError("query formula is not grounded and desugared: " + print(f));
    }
  };
  for (const auto& f : q.axioms) core(f);
  for (const auto& f : q.facts) core(f);
  core(q.target);
}

Formula world0_target(const Query& q) {
  Formula t = q.target ? q.target : f::top();
  return q.mode == QueryMode::FindModel ? t : f::neg(t);
}

class Encoder {
 public:
  Encoder(const Query& q, int n) : q_(q) { e_.n = n; }

  Encoding run() {
    const int n = e_.n;
    CnfInstance& cnf = e_.cnf;
    e_.rel.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) e_.rel[i][j] = cnf.new_var();
      }
    }
    SymbolSet syms;
    auto collect = [&](const Formula& f) {
      if (f) syms.merge(symbols_of(f));
    };
    for (const auto& f : q_.axioms) collect(f);
    for (const auto& f : q_.facts) collect(f);
    collect(q_.target);
    e_.atom_keys.assign(syms.atoms.begin(), syms.atoms.end());
    for (std::size_t a = 0; a < e_.atom_keys.size(); ++a) {
      std::vector<int> vars;
      for (int i = 0; i < n; ++i) vars.push_back(cnf.new_var());
      e_.atom_vars.push_back(vars);
      atom_index_[e_.atom_keys[a]] = static_cast<int>(a);
    }
    e_.incidence_symbols.assign(syms.incidence.begin(), syms.incidence.end());
    for (std::size_t s = 0; s < e_.incidence_symbols.size(); ++s) {
      std::vector<int> vars;
      for (int i = 0; i < n; ++i) vars.push_back(cnf.new_var());
      e_.incidence_vars.push_back(vars);
      incidence_index_[e_.incidence_symbols[s]] = static_cast<int>(s);
    }
    true_ = cnf.new_var();
    cnf.add({true_});

    // Preorder postulates.
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          if (i == j || j == k || i == k) continue;
          cnf.add({-e_.rel[i][j], -e_.rel[j][k], e_.rel[i][k]});
        }
      }
    }
    if (q_.frame.total) {
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) cnf.add({e_.rel[i][j], e_.rel[j][i]});
      }
    }

    for (const auto& ax : q_.axioms) {
      for (int i = 0; i < n; ++i) cnf.add({lit(ax, i)});
    }
    for (const auto& fact : q_.facts) cnf.add({lit(fact, 0)});
    cnf.add({lit(world0_target(q_), 0)});
    return std::move(e_);
  }

 private:
  int r(int i, int j) { return i == j ? true_ : e_.rel[i][j]; }

  int s(int i, int j) {
    if (i == j) return -true_;
    return mk_and({e_.rel[i][j], -e_.rel[j][i]});
  }

  int intern(const Formula& f) {
    if (auto it = ids_.find(f.get()); it != ids_.end()) return it->second;
    std::string key = std::to_string(static_cast<int>(f->kind)) + "|" + f->name + "|" +
                      (f->strict ? "s" : "w") + std::to_string(static_cast<int>(f->value)) + "|";
    for (const auto& a : f->args) key += a.name + "'" + std::to_string(a.others) + ",";
    key += "|";
    for (const auto& c : f->children) key += std::to_string(intern(c)) + ",";
    key += "|";
    for (const auto& g : f->gamma) key += std::to_string(intern(g)) + ",";
    auto [it, inserted] = structural_.emplace(key, static_cast<int>(structural_.size()));
    keep_.push_back(f);
    ids_[f.get()] = it->second;
    return it->second;
  }

  int mk_and(std::vector<int> lits) {
    std::vector<int> xs;
    for (int l : lits) {
      if (l == true_) continue;
      if (l == -true_) return -true_;
      xs.push_back(l);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (std::binary_search(xs.begin(), xs.end(), -xs[i])) return -true_;
    }
    if (xs.empty()) return true_;
    if (xs.size() == 1) return xs[0];
    if (auto it = gates_.find(xs); it != gates_.end()) return it->second;
    int x = e_.cnf.new_var();
    std::vector<int> big{x};
    for (int l : xs) {
      e_.cnf.add({-x, l});
      big.push_back(-l);
    }
    e_.cnf.add(big);
    gates_[xs] = x;
    return x;
  }

  int mk_or(std::vector<int> lits) {
    for (int& l : lits) l = -l;
    return -mk_and(std::move(lits));
  }

  int mk_iff(int a, int b) { return mk_or({mk_and({a, b}), mk_and({-a, -b})}); }

  int agree(const std::vector<Formula>& gamma, int i, int j) {
    if (i == j) return true_;
    std::vector<int> xs;
    for (const auto& g : gamma) xs.push_back(mk_iff(lit(g, i), lit(g, j)));
    return mk_and(xs);
  }

  int lit(const Formula& f, int w) {
    const int id = intern(f);
    const bool rigid = f->kind == NodeKind::GlobalE || f->kind == NodeKind::GlobalA ||
                       f->kind == NodeKind::CpPrefAA;
    const long long key = static_cast<long long>(id) * 128 + (rigid ? 127 : w);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    int out = compute(*f, w);
    cache_[key] = out;
    return out;
  }

  int compute(const Node& f, int w) {
    const int n = e_.n;
    auto child = [&](std::size_t c, int v) { return lit(f.children[c], v); };
    switch (f.kind) {
      case NodeKind::Top: return true_;
      case NodeKind::Bottom: return -true_;
      case NodeKind::Atom: return e_.atom_vars[atom_index_.at(atom_key(f.name, f.args))][w];
      case NodeKind::Incidence: {
        auto party = party_from_name(f.args[0].name);
        if (!party) throw SemanticError("ungrounded party in incidence atom");
        int idx = ValueSymbol{f.value, *party}.index();
        return e_.incidence_vars[incidence_index_.at(idx)][w];
      }
      case NodeKind::Not: return -child(0, w);
      case NodeKind::And:
      case NodeKind::Or: {
        std::vector<int> xs;
        for (std::size_t c = 0; c < f.children.size(); ++c) xs.push_back(child(c, w));
        return f.kind == NodeKind::And ? mk_and(xs) : mk_or(xs);
      }
      case NodeKind::Implies: return mk_or({-child(0, w), child(1, w)});
      case NodeKind::Iff: return mk_iff(child(0, w), child(1, w));
      case NodeKind::DiaLeq:
      case NodeKind::DiaLt: {
        std::vector<int> xs;
        for (int v = 0; v < n; ++v) {
          int guard = f.kind == NodeKind::DiaLeq ? r(w, v) : s(w, v);
          xs.push_back(mk_and({guard, child(0, v)}));
        }
        return mk_or(xs);
      }
      case NodeKind::BoxLeq:
      case NodeKind::BoxLt: {
        std::vector<int> xs;
        for (int v = 0; v < n; ++v) {
          int guard = f.kind == NodeKind::BoxLeq ? r(w, v) : s(w, v);
          xs.push_back(mk_or({-guard, child(0, v)}));
        }
        return mk_and(xs);
      }
      case NodeKind::GlobalE:
      case NodeKind::GlobalA: {
        std::vector<int> xs;
        for (int v = 0; v < n; ++v) xs.push_back(child(0, v));
        return f.kind == NodeKind::GlobalE ? mk_or(xs) : mk_and(xs);
      }
      case NodeKind::CpDiaLeq:
      case NodeKind::CpDiaLt: {
        std::vector<int> xs;
        for (int v = 0; v < n; ++v) {
          int guard = f.kind == NodeKind::CpDiaLeq ? r(w, v) : s(w, v);
          xs.push_back(mk_and({guard, agree(f.gamma, w, v), child(0, v)}));
        }
        return mk_or(xs);
      }
      case NodeKind::CpPrefAA: {
        std::vector<int> xs;
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            int rel = f.strict ? s(a, b) : r(a, b);
            xs.push_back(mk_or({-child(0, a), -child(1, b), -agree(f.gamma, a, b), rel}));
          }
        }
        return mk_and(xs);
      }
      default:
        throw SemanticError("encoder received a non-core formula");
    }
  }

  const Query& q_;
  Encoding e_;
  int true_ = 0;
  std::map<std::string, int> atom_index_;
  std::map<int, int> incidence_index_;
  std::unordered_map<const Node*, int> ids_;
  std::unordered_map<std::string, int> structural_;
  std::vector<Formula> keep_;
  std::unordered_map<long long, int> cache_;
  std::map<std::vector<int>, int> gates_;
};

Verdict found(const Query& q, PreferenceModel m, SolveStats stats) {
  if (auto bad = validate_model(m)) {
    throw std::logic_error("decoded witness violates " + bad->to_string());
  }
  if (!witness_ok(q, m)) throw std::logic_error("decoded witness does not satisfy the query");
  Verdict v;
  v.kind = q.mode == QueryMode::FindModel ? VerdictKind::Satisfiable : VerdictKind::Countermodel;
  v.bound_reached = m.size();
  v.witness = std::move(m);
  v.world = 0;
  v.stats = stats;
  return v;
}

Verdict exhausted(const Query& q, int n, SolveStats stats) {
  Verdict v;
  v.kind = q.mode == QueryMode::FindModel ? VerdictKind::Unsatisfiable : VerdictKind::BoundedValid;
  v.bound_reached = n;
  v.stats = stats;
  return v;
}

Verdict unknown(int completed, const std::string& why, SolveStats stats) {
  Verdict v;
  v.kind = VerdictKind::Unknown;
  v.bound_reached = completed;
  v.reason = why + " after " + worlds_word(completed);
  v.stats = stats;
  return v;
}

void add_stats(SolveStats& into, const SolveStats& s) {
  into.decisions += s.decisions;
  into.conflicts += s.conflicts;
  into.models_tried += s.models_tried;
}

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

Deadline deadline_of(const Budget& b) {
  if (b.seconds <= 0) return std::nullopt;
  return std::chrono::steady_clock::now() +
         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
             std::chrono::duration<double>(b.seconds));
}

// Verdict at exactly n worlds with the SAT engine. Kind is Countermodel /
// Satisfiable, BoundedValid / Unsatisfiable (bound_reached = n), or Unknown.
Verdict sat_at(const Query& q, int n, Deadline deadline) {
  Encoding e = encode(q, n);
  SatBudget sb;
  sb.max_conflicts = q.budget.conflicts;
  sb.deadline = deadline;
  SatResult r = sat_solve(e.cnf, q.seed, sb);
  SolveStats st{r.stats.decisions, r.stats.conflicts, 0};
  if (r.status == SatStatus::Sat) return found(q, decode(e, r.model, q.declared_atoms), st);
  if (r.status == SatStatus::Unsat) return exhausted(q, n, st);
  return unknown(n - 1, "budget exhausted", st);
}

// ---- enumeration oracle ----

struct Constraint {
  Formula f;
  bool everywhere = false;
  std::vector<int> symbols;
};

struct Symbol {
  bool is_atom = true;
  std::string key;
  int incidence = 0;
};

void flatten(const Formula& f, bool everywhere, std::vector<Constraint>& out) {
  if (f->kind == NodeKind::And) {
    for (const auto& c : f->children) flatten(c, everywhere, out);
    return;
  }
  if (f->kind == NodeKind::Top) return;
  out.push_back({f, everywhere, {}});
}

// Kleene evaluation over a partial valuation: `t` holds the worlds where the
// formula is true under every completion, `f` those where it is false under
// every completion. Used only to prune; complete assignments are re-checked
// with the ordinary evaluator.
struct Tri {
  std::uint64_t t = 0;
  std::uint64_t f = 0;
};

class PartialEval {
 public:
  PartialEval(const PreferenceModel& m, const Relation& weak, const Relation& strict,
              const std::vector<char>& assigned, const std::unordered_map<std::string, int>& atom_symbol,
              const std::array<int, kValueSymbolCount>& incidence_symbol)
      : m_(m),
        weak_(weak),
        strict_(strict),
        assigned_(assigned),
        atom_symbol_(atom_symbol),
        incidence_symbol_(incidence_symbol),
        full_(Extension::full_mask(m.size())) {}

  Tri eval(const Formula& f) {
    if (auto it = memo_.find(f.get()); it != memo_.end()) return it->second;
    Tri out = compute(*f);
    memo_.emplace(f.get(), out);
    return out;
  }

 private:
  std::uint64_t dia(const Relation& r, std::uint64_t mask) const {
    std::uint64_t out = 0;
    for (int w = 0; w < r.n; ++w) {
      if (r.rows[w] & mask) out |= std::uint64_t{1} << w;
    }
    return out;
  }
  // Worlds all of whose successors lie in `mask`.
  std::uint64_t box(const Relation& r, std::uint64_t mask) const { return ~dia(r, ~mask & full_) & full_; }

  Tri known(std::uint64_t bits) const { return {bits, ~bits & full_}; }

  Tri modal(const Relation& r, bool diamond, Tri c) const {
    if (diamond) return {dia(r, c.t), box(r, c.f)};
    return {box(r, c.t), dia(r, c.f)};
  }

  Tri compute(const Node& n) {
    auto sub = [&](std::size_t i) { return eval(n.children[i]); };
    switch (n.kind) {
      case NodeKind::Top: return {full_, 0};
      case NodeKind::Bottom: return {0, full_};
      case NodeKind::Atom: {
        auto it = atom_symbol_.find(atom_key(n.name, n.args));
        if (it == atom_symbol_.end() || !assigned_[it->second]) return {};
        return known(m_.atom(it->first)->bits());
      }
      case NodeKind::Incidence: {
        ValueSymbol v{n.value, *party_from_name(n.args[0].name)};
        int s = incidence_symbol_[v.index()];
        if (s < 0 || !assigned_[s]) return {};
        return known(m_.incidence(v).bits());
      }
      case NodeKind::Not: {
        Tri c = sub(0);
        return {c.f, c.t};
      }
      case NodeKind::And:
      case NodeKind::Or: {
        const bool conj = n.kind == NodeKind::And;
        Tri acc = conj ? Tri{full_, 0} : Tri{0, full_};
        for (std::size_t i = 0; i < n.children.size(); ++i) {
          Tri c = sub(i);
          if (conj) {
            acc = {acc.t & c.t, acc.f | c.f};
          } else {
            acc = {acc.t | c.t, acc.f & c.f};
          }
        }
        return acc;
      }
      case NodeKind::Implies: {
        Tri a = sub(0);
        Tri b = sub(1);
        return {a.f | b.t, a.t & b.f};
      }
      case NodeKind::Iff: {
        Tri a = sub(0);
        Tri b = sub(1);
        return {(a.t & b.t) | (a.f & b.f), (a.t & b.f) | (a.f & b.t)};
      }
      case NodeKind::DiaLeq: return modal(weak_, true, sub(0));
      case NodeKind::BoxLeq: return modal(weak_, false, sub(0));
      case NodeKind::DiaLt: return modal(strict_, true, sub(0));
      case NodeKind::BoxLt: return modal(strict_, false, sub(0));
      case NodeKind::GlobalE: {
        Tri c = sub(0);
        return {c.t ? full_ : 0, c.f == full_ ? full_ : 0};
      }
      case NodeKind::GlobalA: {
        Tri c = sub(0);
        return {c.t == full_ ? full_ : 0, c.f ? full_ : 0};
      }
      case NodeKind::CpDiaLeq:
      case NodeKind::CpDiaLt:
      case NodeKind::CpPrefAA: {
        // Only decided once every context formula is known everywhere.
        std::vector<Extension> gamma;
        for (const auto& g : n.gamma) {
          Tri x = eval(g);
          if ((x.t | x.f) != full_) return {};
          gamma.push_back(Extension(m_.size(), x.t));
        }
        RelationPair rel = cp_relation(gamma, m_);
        if (n.kind == NodeKind::CpDiaLeq) return modal(rel.weak, true, sub(0));
        if (n.kind == NodeKind::CpDiaLt) return modal(rel.strict, true, sub(0));
        const Relation& r = n.strict ? rel.strict : rel.weak;
        const Relation same = cp_agreement(gamma, m_.size());
        Tri a = sub(0);
        Tri b = sub(1);
        const std::uint64_t maybe_a = ~a.f & full_;
        const std::uint64_t maybe_b = ~b.f & full_;
        bool surely = true;
        bool never = false;
        for (int s = 0; s < r.n; ++s) {
          const std::uint64_t may = maybe_b & same.rows[s];
          const std::uint64_t must = b.t & same.rows[s];
          if ((maybe_a >> s) & 1U) surely = surely && (r.rows[s] & may) == may;
          if ((a.t >> s) & 1U) never = never || (r.rows[s] & must) != must;
        }
        if (surely) return {full_, 0};
        if (never) return {0, full_};
        return {};
      }
      default:
        throw SemanticError("enumeration received a non-core formula");
    }
  }

  const PreferenceModel& m_;
  const Relation& weak_;
  const Relation& strict_;
  const std::vector<char>& assigned_;
  const std::unordered_map<std::string, int>& atom_symbol_;
  const std::array<int, kValueSymbolCount>& incidence_symbol_;
  std::uint64_t full_;
  std::unordered_map<const Node*, Tri> memo_;
};

class EnumSearch {
 public:
  EnumSearch(const Query& q, int n, Deadline deadline) : q_(q), n_(n), deadline_(deadline) {
    incidence_symbol_.fill(-1);
  }

  Verdict run() {
    for (const auto& ax : q_.axioms) flatten(ax, true, constraints_);
    for (const auto& fact : q_.facts) flatten(fact, false, constraints_);
    flatten(world0_target(q_), false, constraints_);

    for (auto& c : constraints_) {
      SymbolSet s = symbols_of(c.f);
      for (const auto& a : s.atoms) {
        auto [it, fresh] = atom_symbol_.emplace(a, static_cast<int>(symbols_.size()));
        if (fresh) symbols_.push_back({true, a, 0});
        c.symbols.push_back(it->second);
      }
      for (int i : s.incidence) {
        if (incidence_symbol_[i] < 0) {
          incidence_symbol_[i] = static_cast<int>(symbols_.size());
          symbols_.push_back({false, "", i});
        }
        c.symbols.push_back(incidence_symbol_[i]);
      }
    }
    build_components();
    values_ = 1U << n_;
    full_domain_ = values_ == 32 ? ~0U : (1U << values_) - 1;

    for (const Relation& rel : enumerate_preorders(n_, q_.frame.total)) {
      PreferenceModel m(n_);
      m.set_betterness(rel);
      m.set_total_flag(q_.frame.total);
      weak_ = rel;
      strict_ = m.strict_betterness();
      for (const auto& k : q_.declared_atoms) m.set_atom(k, Extension(n_));
      for (const auto& s : symbols_) assign(m, s, 0);
      assigned_.assign(symbols_.size(), 0);
      domain_.assign(symbols_.size(), full_domain_);
      bool ok = true;
      for (int ci : ground_constraints_) ok = ok && holds(m, constraints_[ci]);
      for (std::size_t comp = 0; ok && comp < components_.size(); ++comp) {
        ok = search_component(m, components_[comp]);
        if (stop_) return unknown(n_ - 1, stop_reason_, stats_);
      }
      if (ok) return found(q_, m, stats_);
    }
    return exhausted(q_, n_, stats_);
  }

 private:
  struct Component {
    std::vector<int> members;  // symbol ids, in first-use order
    std::vector<int> all;      // every constraint of the component
  };

  void build_components() {
    const int ns = static_cast<int>(symbols_.size());
    std::vector<int> parent(ns);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& c : constraints_) {
      for (std::size_t k = 1; k < c.symbols.size(); ++k) parent[find(c.symbols[k])] = find(c.symbols[0]);
    }
    touching_.assign(ns, {});
    neighbours_.assign(ns, {});
    std::map<int, Component> by_root;
    std::vector<int> roots;
    for (std::size_t ci = 0; ci < constraints_.size(); ++ci) {
      const auto& c = constraints_[ci];
      if (c.symbols.empty()) {
        ground_constraints_.push_back(static_cast<int>(ci));
        continue;
      }
      int root = find(c.symbols[0]);
      if (!by_root.count(root)) roots.push_back(root);
      Component& comp = by_root[root];
      comp.all.push_back(static_cast<int>(ci));
      for (int s : c.symbols) {
        if (touching_[s].empty()) comp.members.push_back(s);
        touching_[s].push_back(static_cast<int>(ci));
        for (int t : c.symbols) {
          if (t != s) neighbours_[s].push_back(t);
        }
      }
    }
    for (auto& nb : neighbours_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    for (int r : roots) components_.push_back(std::move(by_root[r]));
  }

  void assign(PreferenceModel& m, const Symbol& s, std::uint64_t mask) {
    Extension e(n_, mask);
    if (s.is_atom) {
      m.set_atom(s.key, e);
    } else {
      m.set_incidence(ValueSymbol::from_index(s.incidence), e);
    }
  }

  bool holds(const PreferenceModel& m, const Constraint& c) {
    Extension e = eval(c.f, m);
    return c.everywhere ? e.is_full() : e.contains(0);
  }

  // True if some constraint on `sym` is already false under every completion.
  bool refuted(PreferenceModel& m, int sym) {
    PartialEval pe(m, weak_, strict_, assigned_, atom_symbol_, incidence_symbol_);
    for (int ci : touching_[sym]) {
      const Constraint& c = constraints_[ci];
      Tri x = pe.eval(c.f);
      if (c.everywhere ? x.f != 0 : (x.f & 1U) != 0) return true;
    }
    return false;
  }

  // Drops the values of unassigned `sym` that are refuted right away.
  std::uint32_t filter(PreferenceModel& m, int sym, std::uint32_t domain) {
    std::uint32_t kept = 0;
    assigned_[sym] = 1;
    for (std::uint32_t v = 0; v < values_; ++v) {
      if (!((domain >> v) & 1U)) continue;
      assign(m, symbols_[sym], v);
      if (!refuted(m, sym)) kept |= 1U << v;
    }
    assigned_[sym] = 0;
    assign(m, symbols_[sym], 0);
    return kept;
  }

  bool out_of_budget() {
    if (q_.budget.models > 0 && stats_.models_tried >= q_.budget.models) {
      stop_reason_ = "model budget exhausted";
      return stop_ = true;
    }
    if (deadline_ && (++nodes_ & 255) == 0 && std::chrono::steady_clock::now() > *deadline_) {
      stop_reason_ = "time budget exhausted";
      return stop_ = true;
    }
    return false;
  }

  bool search_component(PreferenceModel& m, const Component& comp) {
    for (int s : comp.members) {
      domain_[s] = filter(m, s, full_domain_);
      if (domain_[s] == 0) return false;
    }
    return search(m, comp);
  }

  // Forward checking with smallest-domain-first branching; ties go to the
  // symbol seen first.
  bool search(PreferenceModel& m, const Component& comp) {
    int pick = -1;
    for (int s : comp.members) {
      if (assigned_[s]) continue;
      if (pick < 0 || std::popcount(domain_[s]) < std::popcount(domain_[pick])) pick = s;
    }
    if (pick < 0) {
      ++stats_.models_tried;
      for (int ci : comp.all) {
        if (!holds(m, constraints_[ci])) return false;
      }
      return true;
    }
    const std::uint32_t domain = domain_[pick];
    for (std::uint32_t v = 0; v < values_; ++v) {
      if (!((domain >> v) & 1U)) continue;
      if (out_of_budget()) break;
      assigned_[pick] = 1;
      assign(m, symbols_[pick], v);
      std::vector<std::pair<int, std::uint32_t>> saved;
      bool wiped = refuted(m, pick);
      for (std::size_t k = 0; !wiped && k < neighbours_[pick].size(); ++k) {
        int nb = neighbours_[pick][k];
        if (assigned_[nb]) continue;
        std::uint32_t narrowed = filter(m, nb, domain_[nb]);
        if (narrowed != domain_[nb]) {
          saved.emplace_back(nb, domain_[nb]);
          domain_[nb] = narrowed;
        }
        wiped = narrowed == 0;
      }
      if (!wiped && search(m, comp)) return true;
      for (auto it = saved.rbegin(); it != saved.rend(); ++it) domain_[it->first] = it->second;
      if (stop_) break;
    }
    assigned_[pick] = 0;
    assign(m, symbols_[pick], 0);
    return false;
  }

  const Query& q_;
  int n_;
  Deadline deadline_;
  std::vector<Constraint> constraints_;
  std::vector<Symbol> symbols_;
  std::unordered_map<std::string, int> atom_symbol_;
  std::array<int, kValueSymbolCount> incidence_symbol_;
  std::vector<int> ground_constraints_;
  std::vector<Component> components_;
  std::vector<std::vector<int>> touching_;
  std::vector<std::vector<int>> neighbours_;
  std::vector<char> assigned_;
  std::vector<std::uint32_t> domain_;
  std::uint32_t values_ = 0;
  std::uint32_t full_domain_ = 0;
  Relation weak_;
  Relation strict_;
  SolveStats stats_;
  long nodes_ = 0;
  bool stop_ = false;
  std::string stop_reason_;
};

Verdict enum_at(const Query& q, int n, Deadline deadline) {
  if (n < 1 || n > 3) throw ConfigError("enumeration oracle supports 1..3 worlds, got " + std::to_string(n));
  return EnumSearch(q, n, deadline).run();
}

}  // namespace

std::string_view verdict_kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::BoundedValid: return "BOUNDED-VALID";
    case VerdictKind::Countermodel: return "COUNTERMODEL";
    case VerdictKind::Satisfiable: return "SATISFIABLE";
    case VerdictKind::Unsatisfiable: return "UNSATISFIABLE";
    case VerdictKind::Unknown: return "UNKNOWN";
  }
  return "?";
}

std::string Verdict::headline() const {
  std::string out(verdict_kind_name(kind));
  switch (kind) {
    case VerdictKind::BoundedValid:
      return out + " (no countermodel up to " + worlds_word(bound_reached) + ")";
    case VerdictKind::Unsatisfiable:
      return out + " (no model up to " + worlds_word(bound_reached) + ")";
    case VerdictKind::Countermodel:
      return out + " (" + worlds_word(witness ? witness->size() : 0) + ", fails at w" +
             std::to_string(world) + ")";
    case VerdictKind::Satisfiable:
      return out + " (" + worlds_word(witness ? witness->size() : 0) + ")";
    case VerdictKind::Unknown:
      return out + " (" + reason + ")";
  }
  return out;
}

std::string Verdict::render() const {
  std::string out = headline() + "\n";
  if (witness) out += render_text(*witness);
  return out;
}

Encoding encode(const Query& q, int n) {
  validate_query(q);
  if (n < 1 || n > q.bound) {
    throw ConfigError("world count " + std::to_string(n) + " outside 1.." + std::to_string(q.bound));
  }
  return Encoder(q, n).run();
}

PreferenceModel decode(const Encoding& e, const std::vector<bool>& a,
                       const std::vector<std::string>& declared_atoms) {
  PreferenceModel m(e.n);
  for (int i = 0; i < e.n; ++i) {
    for (int j = 0; j < e.n; ++j) {
      if (i != j && a.at(e.rel[i][j])) m.set_leq(i, j);
    }
  }
  for (const auto& k : declared_atoms) m.set_atom(k, Extension(e.n));
  for (std::size_t k = 0; k < e.atom_keys.size(); ++k) {
    Extension x(e.n);
    for (int i = 0; i < e.n; ++i) {
      if (a.at(e.atom_vars[k][i])) x.insert(i);
    }
    m.set_atom(e.atom_keys[k], x);
  }
  for (std::size_t k = 0; k < e.incidence_symbols.size(); ++k) {
    Extension x(e.n);
    for (int i = 0; i < e.n; ++i) {
      if (a.at(e.incidence_vars[k][i])) x.insert(i);
    }
    m.set_incidence(ValueSymbol::from_index(e.incidence_symbols[k]), x);
  }
  return m;
}

bool witness_ok(const Query& q, const PreferenceModel& m) {
  Evaluator ev(m);
  for (const auto& ax : q.axioms) {
    if (!ev.eval(ax).is_full()) return false;
  }
  for (const auto& fact : q.facts) {
    if (!ev.eval(fact).contains(0)) return false;
  }
  return ev.eval(world0_target(q)).contains(0);
}

std::vector<Relation> enumerate_preorders(int n, bool total) {
  if (n < 1 || n > 5) throw ConfigError("preorder enumeration supports 1..5 worlds");
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) cells.emplace_back(i, j);
    }
  }
  std::vector<Relation> out;
  const std::uint64_t limit = std::uint64_t{1} << cells.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    Relation r = Relation::identity(n);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if ((bits >> c) & 1U) r.set(cells[c].first, cells[c].second);
    }
    bool ok = true;
    for (int i = 0; ok && i < n; ++i) {
      for (int j = 0; ok && j < n; ++j) {
        if (!r.test(i, j)) {
          if (total && !r.test(j, i)) ok = false;
          continue;
        }
        if ((r.rows[j] & ~r.rows[i]) != 0) ok = false;
      }
    }
    if (ok) out.push_back(r);
  }
  return out;
}

Verdict enum_oracle(const Query& q, int n) {
  validate_query(q);
  return enum_at(q, n, deadline_of(q.budget));
}

Verdict check(const Query& q, Engine engine) {
  validate_query(q);
  const Deadline deadline = deadline_of(q.budget);
  auto at = [&](int n) {
    return engine == Engine::Sat ? sat_at(q, n, deadline) : enum_at(q, n, deadline);
  };
  SolveStats total;
  const int workers = std::max(1, q.workers);
  for (int start = 1; start <= q.bound; start += workers) {
    const int stop = std::min(q.bound, start + workers - 1);
    std::vector<Verdict> batch;
    if (workers == 1) {
      batch.push_back(at(start));
    } else {
      std::vector<std::future<Verdict>> futures;
      for (int n = start; n <= stop; ++n) futures.push_back(std::async(std::launch::async, at, n));
      for (auto& fu : futures) batch.push_back(fu.get());
    }
    // Smallest n first: later sizes only matter if every smaller one was exhausted.
    for (auto& v : batch) {
      add_stats(total, v.stats);
      if (v.kind == VerdictKind::Countermodel || v.kind == VerdictKind::Satisfiable ||
          v.kind == VerdictKind::Unknown) {
        v.stats = total;
        return v;
      }
    }
  }
  return exhausted(q, q.bound, total);
}

}  // namespace prefkb
