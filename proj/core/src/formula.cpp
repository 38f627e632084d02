#include "prefkb/formula.hpp"

#include <stdexcept>

namespace prefkb {

std::string_view lift_pattern_name(LiftPattern p) {
  switch (p) {
    case LiftPattern::EE: return "ee";
    case LiftPattern::EA: return "ea";
    case LiftPattern::AE: return "ae";
    case LiftPattern::AA: return "aa";
  }
  return "?";
}

bool is_core_kind(NodeKind k) {
  switch (k) {
    case NodeKind::Top:
    case NodeKind::Bottom:
    case NodeKind::Atom:
    case NodeKind::Incidence:
    case NodeKind::Not:
    case NodeKind::And:
    case NodeKind::Or:
    case NodeKind::Implies:
    case NodeKind::Iff:
    case NodeKind::DiaLeq:
    case NodeKind::BoxLeq:
    case NodeKind::DiaLt:
    case NodeKind::BoxLt:
    case NodeKind::GlobalE:
    case NodeKind::GlobalA:
    case NodeKind::CpDiaLeq:
    case NodeKind::CpDiaLt:
    case NodeKind::CpPrefAA:
      return true;
    default:
      return false;
  }
}

namespace {

bool equal_lists(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!equal(a[i], b[i])) return false;
  }
  return true;
}

std::string print_term(const Term& t) {
  std::string s = t.name;
  for (int i = 0; i < t.others; ++i) s = "(other " + s + ")";
  return s;
}

void print_into(const Formula& f, std::string& out);

void print_list(const std::vector<Formula>& xs, std::string& out) {
  out += "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += " ";
    print_into(xs[i], out);
  }
  out += ")";
}

void print_op(std::string_view op, const std::vector<Formula>& xs, std::string& out) {
  out += "(";
  out += op;
  for (const auto& x : xs) {
    out += " ";
    print_into(x, out);
  }
  out += ")";
}

std::string print_item(const AggItem& it) {
  return std::string(principle_name(it.principle)) + " " + print_term(it.party);
}

void print_into(const Formula& f, std::string& out) {
  const Node& n = *f;
  switch (n.kind) {
    case NodeKind::Top: out += "true"; return;
    case NodeKind::Bottom: out += "false"; return;
    case NodeKind::Atom:
      if (n.args.empty()) {
        out += n.name;
      } else {
        out += "(" + n.name;
        for (const auto& a : n.args) out += " " + print_term(a);
        out += ")";
      }
      return;
    case NodeKind::Incidence:
      out += "(val " + std::string(basic_value_name(n.value)) + " " + print_term(n.args[0]) + ")";
      return;
    case NodeKind::Not: print_op("not", n.children, out); return;
    case NodeKind::And: print_op("and", n.children, out); return;
    case NodeKind::Or: print_op("or", n.children, out); return;
    case NodeKind::Implies: print_op("implies", n.children, out); return;
    case NodeKind::Iff: print_op("iff", n.children, out); return;
    case NodeKind::DiaLeq: print_op("dialeq", n.children, out); return;
    case NodeKind::BoxLeq: print_op("boxleq", n.children, out); return;
    case NodeKind::DiaLt: print_op("dialt", n.children, out); return;
    case NodeKind::BoxLt: print_op("boxlt", n.children, out); return;
    case NodeKind::GlobalE: print_op("E", n.children, out); return;
    case NodeKind::GlobalA: print_op("A", n.children, out); return;
    case NodeKind::Forall:
    case NodeKind::Exists:
      out += n.kind == NodeKind::Forall ? "(forall " : "(exists ";
      out += n.name + " " + n.sort + " ";
      print_into(n.children[0], out);
      out += ")";
      return;
    case NodeKind::SynPref:
      out += "(prefsyn " + std::string(lift_pattern_name(n.pattern)) +
             (n.strict ? " strict " : " weak ");
      print_into(n.children[0], out);
      out += " ";
      print_into(n.children[1], out);
      out += ")";
      return;
    case NodeKind::CpDiaLeq:
    case NodeKind::CpDiaLt:
      out += n.kind == NodeKind::CpDiaLeq ? "(cp-dialeq " : "(cp-dialt ";
      print_list(n.gamma, out);
      out += " ";
      print_into(n.children[0], out);
      out += ")";
      return;
    case NodeKind::CpPrefAA:
      out += "(cp-pref-aa ";
      print_list(n.gamma, out);
      out += n.strict ? " strict " : " weak ";
      print_into(n.children[0], out);
      out += " ";
      print_into(n.children[1], out);
      out += ")";
      return;
    case NodeKind::Cond: print_op("cond", n.children, out); return;
    case NodeKind::Ext: out += "(ext " + print_item(n.items[0]) + ")"; return;
    case NodeKind::Agg:
      out += "(agg";
      for (const auto& it : n.items) out += " (" + print_item(it) + ")";
      out += ")";
      return;
    case NodeKind::VPref:
      out += n.strict ? "(vpref strict " : "(vpref weak ";
      print_into(n.children[0], out);
      out += " ";
      print_into(n.children[1], out);
      out += ")";
      return;
    case NodeKind::Promotes:
      out += "(promotes ";
      print_into(n.children[0], out);
      out += " ";
      print_into(n.children[1], out);
      out += " (" + print_item(n.items[0]) + "))";
      return;
    case NodeKind::Conflict: out += "(conflict " + print_term(n.args[0]) + ")"; return;
  }
}

Formula make(Node n) { return std::make_shared<const Node>(std::move(n)); }

Formula unary(NodeKind k, Formula a) {
  Node n;
  n.kind = k;
  n.children = {std::move(a)};
  return make(std::move(n));
}

Formula binary(NodeKind k, Formula a, Formula b) {
  Node n;
  n.kind = k;
  n.children = {std::move(a), std::move(b)};
  return make(std::move(n));
}

}  // namespace

bool equal(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  const Node& x = *a;
  const Node& y = *b;
  return x.kind == y.kind && x.name == y.name && x.sort == y.sort && x.args == y.args &&
         x.items == y.items && x.pattern == y.pattern && x.strict == y.strict &&
         x.value == y.value && equal_lists(x.children, y.children) &&
         equal_lists(x.gamma, y.gamma);
}

std::string print(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

std::string atom_key(const std::string& name, const std::vector<Term>& args) {
  if (args.empty()) return name;
  std::string s = name + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ",";
    s += print_term(args[i]);
  }
  return s + ")";
}

namespace f {

Formula top() {
  Node n;
  n.kind = NodeKind::Top;
  return make(std::move(n));
}
Formula bottom() {
  Node n;
  n.kind = NodeKind::Bottom;
  return make(std::move(n));
}

Formula atom(std::string name, std::vector<Term> args) {
  Node n;
  n.kind = NodeKind::Atom;
  n.name = std::move(name);
  n.args = std::move(args);
  return make(std::move(n));
}

Formula incidence(BasicValue v, Term party) {
  Node n;
  n.kind = NodeKind::Incidence;
  n.value = v;
  n.args = {std::move(party)};
  return make(std::move(n));
}

Formula neg(Formula a) { return unary(NodeKind::Not, std::move(a)); }

Formula conj(std::vector<Formula> xs) {
  if (xs.empty()) return top();
  if (xs.size() == 1) return xs[0];
  Node n;
  n.kind = NodeKind::And;
  n.children = std::move(xs);
  return make(std::move(n));
}

Formula disj(std::vector<Formula> xs) {
  if (xs.empty()) return bottom();
  if (xs.size() == 1) return xs[0];
  Node n;
  n.kind = NodeKind::Or;
  n.children = std::move(xs);
  return make(std::move(n));
}

Formula conj(Formula a, Formula b) { return conj(std::vector<Formula>{std::move(a), std::move(b)}); }
Formula disj(Formula a, Formula b) { return disj(std::vector<Formula>{std::move(a), std::move(b)}); }
Formula implies(Formula a, Formula b) { return binary(NodeKind::Implies, std::move(a), std::move(b)); }
Formula iff(Formula a, Formula b) { return binary(NodeKind::Iff, std::move(a), std::move(b)); }
Formula dia_leq(Formula a) { return unary(NodeKind::DiaLeq, std::move(a)); }
Formula box_leq(Formula a) { return unary(NodeKind::BoxLeq, std::move(a)); }
Formula dia_lt(Formula a) { return unary(NodeKind::DiaLt, std::move(a)); }
Formula box_lt(Formula a) { return unary(NodeKind::BoxLt, std::move(a)); }
Formula exists_world(Formula a) { return unary(NodeKind::GlobalE, std::move(a)); }
Formula all_worlds(Formula a) { return unary(NodeKind::GlobalA, std::move(a)); }

Formula forall(std::string var, std::string sort, Formula body) {
  Node n;
  n.kind = NodeKind::Forall;
  n.name = std::move(var);
  n.sort = std::move(sort);
  n.children = {std::move(body)};
  return make(std::move(n));
}

Formula exists(std::string var, std::string sort, Formula body) {
  Node n;
  n.kind = NodeKind::Exists;
  n.name = std::move(var);
  n.sort = std::move(sort);
  n.children = {std::move(body)};
  return make(std::move(n));
}

Formula syn_pref(LiftPattern p, bool strict, Formula lhs, Formula rhs) {
  Node n;
  n.kind = NodeKind::SynPref;
  n.pattern = p;
  n.strict = strict;
  n.children = {std::move(lhs), std::move(rhs)};
  return make(std::move(n));
}

Formula cp_dia_leq(std::vector<Formula> gamma, Formula body) {
  Node n;
  n.kind = NodeKind::CpDiaLeq;
  n.gamma = std::move(gamma);
  n.children = {std::move(body)};
  return make(std::move(n));
}

Formula cp_dia_lt(std::vector<Formula> gamma, Formula body) {
  Node n;
  n.kind = NodeKind::CpDiaLt;
  n.gamma = std::move(gamma);
  n.children = {std::move(body)};
  return make(std::move(n));
}

Formula cp_pref_aa(std::vector<Formula> gamma, bool strict, Formula lhs, Formula rhs) {
  Node n;
  n.kind = NodeKind::CpPrefAA;
  n.gamma = std::move(gamma);
  n.strict = strict;
  n.children = {std::move(lhs), std::move(rhs)};
  return make(std::move(n));
}

Formula cond(Formula lhs, Formula rhs) { return binary(NodeKind::Cond, std::move(lhs), std::move(rhs)); }

Formula ext(Principle p, Term party) {
  Node n;
  n.kind = NodeKind::Ext;
  n.items = {AggItem{p, std::move(party)}};
  return make(std::move(n));
}

Formula agg(std::vector<AggItem> items) {
  if (items.empty()) throw std::invalid_argument("agg needs at least one principle");
  Node n;
  n.kind = NodeKind::Agg;
  n.items = std::move(items);
  return make(std::move(n));
}

Formula vpref(bool strict, Formula lhs, Formula rhs) {
  Node n;
  n.kind = NodeKind::VPref;
  n.strict = strict;
  n.children = {std::move(lhs), std::move(rhs)};
  return make(std::move(n));
}

Formula promotes(Formula facts, Formula decision, Principle p, Term party) {
  Node n;
  n.kind = NodeKind::Promotes;
  n.children = {std::move(facts), std::move(decision)};
  n.items = {AggItem{p, std::move(party)}};
  return make(std::move(n));
}

Formula conflict(Term party) {
  Node n;
  n.kind = NodeKind::Conflict;
  n.args = {std::move(party)};
  return make(std::move(n));
}

}  // namespace f

}  // namespace prefkb
