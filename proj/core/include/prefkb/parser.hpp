#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "prefkb/formula.hpp"
#include "prefkb/signature.hpp"

namespace prefkb {

/// A raw s-expression with its source position. `;` starts a line comment.
struct SExpr {
  bool is_list = false;
  std::string symbol;
  std::vector<SExpr> items;
  int line = 1;
  int column = 1;

  bool is_symbol(std::string_view s) const { return !is_list && symbol == s; }
  std::string to_string() const;
};

/// Reads every top-level s-expression in `text`.
std::vector<SExpr> read_sexprs(std::string_view text);

/// Sorts of the variables bound around a subterm.
using VarScope = std::map<std::string, std::string>;

/// Converts an s-expression into a formula, checking names, arities and
/// argument sorts against `sig`.
Formula formula_from_sexpr(const SExpr& e, const Signature& sig, const VarScope& scope = {});

/// Parses exactly one formula.
Formula parse_formula(std::string_view text, const Signature& sig);

}  // namespace prefkb
