#pragma once

#include <set>
#include <string>

#include "prefkb/formula.hpp"
#include "prefkb/signature.hpp"

namespace prefkb {

/// Expands quantifiers over the (finite) sorts of `sig` and resolves
/// `other` applications. Throws SemanticError on an empty sort.
Formula ground(const Formula& f, const Signature& sig);

/// Rewrites derived forms (lifted preferences, conditionals, value-layer
/// forms) into core connectives. `f` must be grounded. Ceteris paribus
/// nodes survive with desugared members.
Formula desugar(const Formula& f);

/// ground followed by desugar.
Formula elaborate(const Formula& f, const Signature& sig);

bool is_grounded(const Formula& f);
bool is_desugared(const Formula& f);

/// Names of the atom predicates occurring in `f` (incidence excluded).
std::set<std::string> atom_names(const Formula& f);

/// Ground atom keys and incidence symbol indices occurring in a grounded formula.
struct SymbolSet {
  std::set<std::string> atoms;
  std::set<int> incidence;

  std::size_t size() const { return atoms.size() + incidence.size(); }
  void merge(const SymbolSet& o) {
    atoms.insert(o.atoms.begin(), o.atoms.end());
    incidence.insert(o.incidence.begin(), o.incidence.end());
  }
};

SymbolSet symbols_of(const Formula& f);

}  // namespace prefkb
