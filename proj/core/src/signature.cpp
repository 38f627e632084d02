#include "prefkb/signature.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string_view>

#include "prefkb/errors.hpp"
#include "prefkb/formula.hpp"
#include "prefkb/values.hpp"

namespace prefkb {

namespace {

// "A" and "E" are operators only in head position, so nullary atoms may use them.
constexpr std::array<std::string_view, 27> kReserved{
    "not",    "and",        "or",         "implies",  "iff",     "boxleq",   "dialeq",
    "boxlt",  "dialt",      "forall",  "exists",   "prefsyn",
    "cp-dialeq", "cp-dialt", "cp-pref-aa", "cond",    "ext",     "agg",      "vpref",
    "promotes", "conflict", "other",      "val",      "true",    "false",    "weak",
    "strict"};

}  // namespace

bool is_reserved_word(const std::string& s) {
  return std::find(kReserved.begin(), kReserved.end(), s) != kReserved.end();
}

Signature::Signature() {
  sorts_.push_back({kContenderSort, {"p", "d"}});
  atoms_.push_back({"For", {kContenderSort}});
}

void Signature::add_sort(const std::string& name, const std::vector<std::string>& constants) {
  if (is_reserved_word(name)) throw SemanticError("sort name is reserved: " + name);
  for (const auto& c : constants) {
    if (is_reserved_word(c)) throw SemanticError("constant name is reserved: " + c);
    auto owner = sort_of_constant(c);
    if (owner && *owner != name) {
      throw SemanticError("constant " + c + " already belongs to sort " + *owner);
    }
  }
  for (auto& s : sorts_) {
    if (s.name != name) continue;
    for (const auto& c : constants) {
      if (std::find(s.constants.begin(), s.constants.end(), c) != s.constants.end()) continue;
      if (name == kContenderSort) {
        throw SemanticError("the contender sort is fixed to {p, d}; cannot add " + c);
      }
      s.constants.push_back(c);
    }
    return;
  }
  std::vector<std::string> unique;
  for (const auto& c : constants) {
    if (std::find(unique.begin(), unique.end(), c) == unique.end()) unique.push_back(c);
  }
  sorts_.push_back({name, unique});
}

void Signature::add_atom(const std::string& name, const std::vector<std::string>& arg_sorts) {
  if (is_reserved_word(name)) throw SemanticError("atom name is reserved: " + name);
  if ((name == "A" || name == "E") && !arg_sorts.empty()) {
    throw SemanticError("atom " + name + " takes arguments and would shadow an operator");
  }
  if (principle_from_name(name) || basic_value_from_name(name)) {
    throw SemanticError("atom name clashes with a value name: " + name);
  }
  for (const auto& s : arg_sorts) {
    if (!find_sort(s)) throw SemanticError("atom " + name + " uses undeclared sort " + s);
  }
  if (const AtomDecl* existing = find_atom(name)) {
    if (existing->arg_sorts != arg_sorts) {
      throw SemanticError("atom " + name + " redeclared with different argument sorts");
    }
    return;
  }
  atoms_.push_back({name, arg_sorts});
}

void Signature::merge(const Signature& other) {
  for (const auto& s : other.sorts_) add_sort(s.name, s.constants);
  for (const auto& a : other.atoms_) add_atom(a.name, a.arg_sorts);
}

const SortDecl* Signature::find_sort(const std::string& name) const {
  for (const auto& s : sorts_) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const AtomDecl* Signature::find_atom(const std::string& name) const {
  for (const auto& a : atoms_) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

std::optional<std::string> Signature::sort_of_constant(const std::string& name) const {
  for (const auto& s : sorts_) {
    if (std::find(s.constants.begin(), s.constants.end(), name) != s.constants.end()) {
      return s.name;
    }
  }
  return std::nullopt;
}

std::vector<std::string> Signature::ground_atom_keys() const {
  std::vector<std::string> keys;
  for (const auto& a : atoms_) {
    std::vector<Term> args(a.arg_sorts.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == a.arg_sorts.size()) {
        keys.push_back(atom_key(a.name, args));
        return;
      }
      for (const auto& c : find_sort(a.arg_sorts[i])->constants) {
        args[i] = Term{c, 0};
        rec(i + 1);
      }
    };
    rec(0);
  }
  return keys;
}

}  // namespace prefkb
