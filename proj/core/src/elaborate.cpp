#include "prefkb/elaborate.hpp"

#include <functional>
#include <map>

#include "prefkb/errors.hpp"

namespace prefkb {

namespace {

using Subst = std::map<std::string, std::string>;

Term ground_term(const Term& t, const Subst& s) {
  std::string base = t.name;
  if (auto it = s.find(base); it != s.end()) base = it->second;
  if (t.others == 0) return Term{base, 0};
  auto party = party_from_name(base);
  if (!party) throw SemanticError("other applied to non-party constant " + base);
  Party x = *party;
  for (int i = 0; i < t.others; ++i) x = other(x);
  return f::party(x);
}

Party party_of(const Term& t) {
  auto x = party_from_name(t.name);
  if (!x || t.others != 0) throw SemanticError("ungrounded party term " + t.name);
  return *x;
}

Formula rebuild(const Node& n, std::vector<Formula> children, std::vector<Formula> gamma) {
  Node copy = n;
  copy.children = std::move(children);
  copy.gamma = std::move(gamma);
  return std::make_shared<const Node>(std::move(copy));
}

Formula ground_rec(const Formula& f, const Signature& sig, const Subst& s) {
  const Node& n = *f;
  if (n.kind == NodeKind::Forall || n.kind == NodeKind::Exists) {
    const SortDecl* sort = sig.find_sort(n.sort);
    if (!sort) throw SemanticError("undeclared sort " + n.sort);
    if (sort->constants.empty()) {
      throw SemanticError("quantification over empty sort " + n.sort);
    }
    std::vector<Formula> parts;
    for (const auto& c : sort->constants) {
      Subst inner = s;
      inner[n.name] = c;
      parts.push_back(ground_rec(n.children[0], sig, inner));
    }
    return n.kind == NodeKind::Forall ? f::conj(std::move(parts)) : f::disj(std::move(parts));
  }
  std::vector<Formula> children;
  for (const auto& c : n.children) children.push_back(ground_rec(c, sig, s));
  std::vector<Formula> gamma;
  for (const auto& g : n.gamma) gamma.push_back(ground_rec(g, sig, s));
  Node copy = n;
  for (auto& a : copy.args) a = ground_term(a, s);
  for (auto& it : copy.items) it.party = ground_term(it.party, s);
  copy.children = std::move(children);
  copy.gamma = std::move(gamma);
  return std::make_shared<const Node>(std::move(copy));
}

Formula principle_ext(Principle p, Party x) {
  std::vector<Formula> parts;
  for (BasicValue v : principle_values(p)) parts.push_back(f::incidence(v, f::party(x)));
  return f::conj(std::move(parts));
}

Formula aggregate_ext(const std::vector<AggItem>& items) {
  std::vector<Formula> parts;
  for (const auto& it : items) parts.push_back(principle_ext(it.principle, party_of(it.party)));
  return f::disj(std::move(parts));
}

Formula lift_syntactic(LiftPattern p, bool strict, const Formula& phi, const Formula& psi) {
  switch (p) {
    case LiftPattern::EE:
      return f::exists_world(f::conj(phi, strict ? f::dia_lt(psi) : f::dia_leq(psi)));
    case LiftPattern::EA:
      return f::exists_world(
          f::conj(psi, strict ? f::box_leq(f::neg(phi)) : f::box_lt(f::neg(phi))));
    case LiftPattern::AE:
      return f::all_worlds(f::implies(phi, strict ? f::dia_lt(psi) : f::dia_leq(psi)));
    case LiftPattern::AA:
      return f::all_worlds(
          f::implies(psi, strict ? f::box_leq(f::neg(phi)) : f::box_lt(f::neg(phi))));
  }
  return f::bottom();
}

Formula desugar_rec(const Formula& f) {
  const Node& n = *f;
  auto sub = [](const Formula& x) { return desugar_rec(x); };
  switch (n.kind) {
    case NodeKind::Forall:
    case NodeKind::Exists:
      throw SemanticError("desugar requires a grounded formula");
    case NodeKind::SynPref:
      return lift_syntactic(n.pattern, n.strict, sub(n.children[0]), sub(n.children[1]));
    case NodeKind::Cond: {
      Formula phi = sub(n.children[0]);
      Formula psi = sub(n.children[1]);
      return f::all_worlds(
          f::implies(phi, f::dia_leq(f::conj(phi, f::box_leq(f::implies(phi, psi))))));
    }
    case NodeKind::Ext:
      return principle_ext(n.items[0].principle, party_of(n.items[0].party));
    case NodeKind::Agg:
      return aggregate_ext(n.items);
    case NodeKind::VPref:
      return lift_syntactic(LiftPattern::AE, n.strict, sub(n.children[0]), sub(n.children[1]));
    case NodeKind::Promotes: {
      Formula value = principle_ext(n.items[0].principle, party_of(n.items[0].party));
      return f::implies(sub(n.children[0]),
                        f::box_lt(f::iff(sub(n.children[1]), f::dia_lt(value))));
    }
    case NodeKind::Conflict: {
      std::vector<Formula> parts;
      for (BasicValue v : kBasicValues) parts.push_back(f::incidence(v, n.args[0]));
      party_of(n.args[0]);
      return f::conj(std::move(parts));
    }
    default: {
      std::vector<Formula> children;
      for (const auto& c : n.children) children.push_back(sub(c));
      std::vector<Formula> gamma;
      for (const auto& g : n.gamma) gamma.push_back(sub(g));
      return rebuild(n, std::move(children), std::move(gamma));
    }
  }
}

bool all_nodes(const Formula& f, const std::function<bool(const Node&)>& pred) {
  if (!pred(*f)) return false;
  for (const auto& c : f->children) {
    if (!all_nodes(c, pred)) return false;
  }
  for (const auto& g : f->gamma) {
    if (!all_nodes(g, pred)) return false;
  }
  return true;
}

void visit(const Formula& f, const std::function<void(const Node&)>& fn) {
  fn(*f);
  for (const auto& c : f->children) visit(c, fn);
  for (const auto& g : f->gamma) visit(g, fn);
}

}  // namespace

Formula ground(const Formula& f, const Signature& sig) { return ground_rec(f, sig, {}); }

Formula desugar(const Formula& f) { return desugar_rec(f); }

Formula elaborate(const Formula& f, const Signature& sig) { return desugar(ground(f, sig)); }

bool is_grounded(const Formula& f) {
  return all_nodes(f, [](const Node& n) {
    if (n.kind == NodeKind::Forall || n.kind == NodeKind::Exists) return false;
    for (const auto& a : n.args) {
      if (a.others != 0) return false;
    }
    for (const auto& it : n.items) {
      if (it.party.others != 0) return false;
    }
    return true;
  });
}

bool is_desugared(const Formula& f) {
  return all_nodes(f, [](const Node& n) { return is_core_kind(n.kind); });
}

std::set<std::string> atom_names(const Formula& f) {
  std::set<std::string> out;
  visit(f, [&](const Node& n) {
    if (n.kind == NodeKind::Atom) out.insert(n.name);
  });
  return out;
}

SymbolSet symbols_of(const Formula& f) {
  SymbolSet out;
  visit(f, [&](const Node& n) {
    if (n.kind == NodeKind::Atom) out.atoms.insert(atom_key(n.name, n.args));
    if (n.kind == NodeKind::Incidence) {
      out.incidence.insert(ValueSymbol{n.value, party_of(n.args[0])}.index());
    }
  });
  return out;
}

}  // namespace prefkb
