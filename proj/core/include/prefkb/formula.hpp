#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "prefkb/values.hpp"

namespace prefkb {

enum class NodeKind {
  // core
  Top,
  Bottom,
  Atom,
  Incidence,
  Not,
  And,
  Or,
  Implies,
  Iff,
  DiaLeq,
  BoxLeq,
  DiaLt,
  BoxLt,
  GlobalE,
  GlobalA,
  CpDiaLeq,
  CpDiaLt,
  CpPrefAA,
  // binders, removed by grounding
  Forall,
  Exists,
  // derived forms, removed by desugaring
  SynPref,
  Cond,
  Ext,
  Agg,
  VPref,
  Promotes,
  Conflict,
};

/// Quantifier pattern of a lifted preference: EA reads "exists t in rhs,
/// for all s in lhs".
enum class LiftPattern { EE, EA, AE, AA };

std::string_view lift_pattern_name(LiftPattern p);

/// A sort-typed argument: a constant or variable with `other` applied
/// `others` times. Only contender-sorted terms may carry `other`.
struct Term {
  std::string name;
  int others = 0;

  bool operator==(const Term&) const = default;
  bool is_ground_constant() const { return others == 0; }
};

struct Node;
using Formula = std::shared_ptr<const Node>;

struct AggItem {
  Principle principle;
  Term party;
  bool operator==(const AggItem&) const = default;
};

struct Node {
  NodeKind kind = NodeKind::Top;
  std::string name;             // atom name, or bound variable
  std::string sort;             // sort of a bound variable
  std::vector<Term> args;       // atom arguments, or the single party term
  std::vector<Formula> children;
  std::vector<Formula> gamma;   // ceteris paribus context
  std::vector<AggItem> items;   // Agg members; Ext/Promotes use items[0]
  LiftPattern pattern = LiftPattern::AE;
  bool strict = false;
  BasicValue value = BasicValue::Freedom;  // Incidence only
};

/// Structural equality.
bool equal(const Formula& a, const Formula& b);

/// Canonical s-expression rendering; parse(print(f)) == f.
std::string print(const Formula& f);

/// Key for grounded atoms in valuations: "Name" or "Name(a,b)".
std::string atom_key(const std::string& name, const std::vector<Term>& args);

/// True iff `k` is one of the kinds accepted by the evaluator.
bool is_core_kind(NodeKind k);

/// Builders. All return fresh immutable nodes.
namespace f {

Formula top();
Formula bottom();
Formula atom(std::string name, std::vector<Term> args = {});
Formula incidence(BasicValue v, Term party);
Formula neg(Formula a);
Formula conj(std::vector<Formula> xs);
Formula disj(std::vector<Formula> xs);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula dia_leq(Formula a);
Formula box_leq(Formula a);
Formula dia_lt(Formula a);
Formula box_lt(Formula a);
Formula exists_world(Formula a);  // E
Formula all_worlds(Formula a);    // A
Formula forall(std::string var, std::string sort, Formula body);
Formula exists(std::string var, std::string sort, Formula body);
Formula syn_pref(LiftPattern p, bool strict, Formula lhs, Formula rhs);
Formula cp_dia_leq(std::vector<Formula> gamma, Formula body);
Formula cp_dia_lt(std::vector<Formula> gamma, Formula body);
Formula cp_pref_aa(std::vector<Formula> gamma, bool strict, Formula lhs, Formula rhs);
Formula cond(Formula lhs, Formula rhs);
Formula ext(Principle p, Term party);
Formula agg(std::vector<AggItem> items);
Formula vpref(bool strict, Formula lhs, Formula rhs);
Formula promotes(Formula facts, Formula decision, Principle p, Term party);
Formula conflict(Term party);

/// Constant or variable term.
inline Term t(std::string name, int others = 0) { return Term{std::move(name), others}; }
inline Term party(Party x) { return Term{std::string(party_name(x)), 0}; }

}  // namespace f

}  // namespace prefkb
