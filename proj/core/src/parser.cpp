#include "prefkb/parser.hpp"

#include <cctype>
#include <optional>

#include "prefkb/errors.hpp"

namespace prefkb {

std::string SExpr::to_string() const {
  if (!is_list) return symbol;
  std::string s = "(";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += " ";
    s += items[i].to_string();
  }
  return s + ")";
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> out;
    skip_space();
    while (pos_ < text_.size()) {
      out.push_back(read_one());
      skip_space();
    }
    return out;
  }

 private:
  static bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  SExpr read_one() {
    SExpr e;
    e.line = line_;
    e.column = col_;
    char c = text_[pos_];
    if (c == '(') {
      e.is_list = true;
      advance();
      skip_space();
      while (true) {
        if (pos_ >= text_.size()) throw ParseError("unclosed '('", e.line, e.column);
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        e.items.push_back(read_one());
        skip_space();
      }
      return e;
    }
    if (c == ')') throw ParseError("unexpected ')'", line_, col_);
    if (!is_name_char(c)) {
      throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }
    while (pos_ < text_.size() && is_name_char(text_[pos_])) {
      e.symbol += text_[pos_];
      advance();
    }
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

[[noreturn]] void fail(const SExpr& at, const std::string& msg) {
  throw ParseError(msg, at.line, at.column);
}

[[noreturn]] void fail_semantic(const SExpr& at, const std::string& msg) {
  throw SemanticError(std::to_string(at.line) + ":" + std::to_string(at.column) + ": " + msg);
}

class Converter {
 public:
  explicit Converter(const Signature& sig) : sig_(sig) {}

  Formula formula(const SExpr& e, const VarScope& scope) {
    if (!e.is_list) return bare_symbol(e);
    if (e.items.empty()) fail(e, "empty form");
    const SExpr& head = e.items[0];
    if (head.is_list) fail(head, "operator expected");
    const std::string& op = head.symbol;
    const std::size_t argc = e.items.size() - 1;

    auto sub = [&](std::size_t i) { return formula(e.items[i], scope); };
    auto want = [&](std::size_t n) {
      if (argc != n) {
        fail(e, op + " expects " + std::to_string(n) + " operand(s), got " + std::to_string(argc));
      }
    };

    if (op == "not") { want(1); return f::neg(sub(1)); }
    if (op == "and" || op == "or") {
      if (argc < 2) fail(e, op + " expects at least 2 operands");
      std::vector<Formula> xs;
      for (std::size_t i = 1; i <= argc; ++i) xs.push_back(sub(i));
      return op == "and" ? f::conj(std::move(xs)) : f::disj(std::move(xs));
    }
    if (op == "implies") { want(2); return f::implies(sub(1), sub(2)); }
    if (op == "iff") { want(2); return f::iff(sub(1), sub(2)); }
    if (op == "dialeq") { want(1); return f::dia_leq(sub(1)); }
    if (op == "boxleq") { want(1); return f::box_leq(sub(1)); }
    if (op == "dialt") { want(1); return f::dia_lt(sub(1)); }
    if (op == "boxlt") { want(1); return f::box_lt(sub(1)); }
    if (op == "E") { want(1); return f::exists_world(sub(1)); }
    if (op == "A") { want(1); return f::all_worlds(sub(1)); }
    if (op == "forall" || op == "exists") {
      want(3);
      const std::string var = symbol_at(e.items[1], "variable name");
      const std::string sort = symbol_at(e.items[2], "sort name");
      if (!sig_.find_sort(sort)) fail_semantic(e.items[2], "undeclared sort " + sort);
      if (sig_.sort_of_constant(var)) fail_semantic(e.items[1], "variable shadows constant " + var);
      VarScope inner = scope;
      inner[var] = sort;
      Formula body = formula(e.items[3], inner);
      return op == "forall" ? f::forall(var, sort, body) : f::exists(var, sort, body);
    }
    if (op == "prefsyn") {
      want(4);
      const std::string pat = symbol_at(e.items[1], "lift pattern");
      LiftPattern p;
      if (pat == "ee") p = LiftPattern::EE;
      else if (pat == "ea") p = LiftPattern::EA;
      else if (pat == "ae") p = LiftPattern::AE;
      else if (pat == "aa") p = LiftPattern::AA;
      else fail(e.items[1], "lift pattern must be one of ee, ea, ae, aa");
      return f::syn_pref(p, strictness(e.items[2]), sub(3), sub(4));
    }
    if (op == "cp-dialeq" || op == "cp-dialt") {
      want(2);
      auto gamma = formula_list(e.items[1], scope);
      return op == "cp-dialeq" ? f::cp_dia_leq(std::move(gamma), sub(2))
                               : f::cp_dia_lt(std::move(gamma), sub(2));
    }
    if (op == "cp-pref-aa") {
      want(4);
      auto gamma = formula_list(e.items[1], scope);
      return f::cp_pref_aa(std::move(gamma), strictness(e.items[2]), sub(3), sub(4));
    }
    if (op == "cond") { want(2); return f::cond(sub(1), sub(2)); }
    if (op == "ext") {
      want(2);
      return f::ext(principle_at(e.items[1]), party_term(e.items[2], scope));
    }
    if (op == "agg") {
      if (argc < 1) fail(e, "agg expects at least one (PRINCIPLE party) pair");
      std::vector<AggItem> items;
      for (std::size_t i = 1; i <= argc; ++i) items.push_back(agg_item(e.items[i], scope));
      return f::agg(std::move(items));
    }
    if (op == "vpref") {
      want(3);
      Formula lhs = sub(2);
      Formula rhs = sub(3);
      for (std::size_t i : {2U, 3U}) {
        NodeKind k = (i == 2 ? lhs : rhs)->kind;
        if (k != NodeKind::Ext && k != NodeKind::Agg) {
          fail(e.items[i], "vpref operands must be ext or agg forms");
        }
      }
      return f::vpref(strictness(e.items[1]), lhs, rhs);
    }
    if (op == "promotes") {
      want(3);
      AggItem it = agg_item(e.items[3], scope);
      return f::promotes(sub(1), sub(2), it.principle, it.party);
    }
    if (op == "conflict") { want(1); return f::conflict(party_term(e.items[1], scope)); }
    if (op == "val") {
      want(2);
      const std::string v = symbol_at(e.items[1], "basic value");
      auto bv = basic_value_from_name(v);
      if (!bv) fail(e.items[1], "unknown basic value " + v);
      return f::incidence(*bv, party_term(e.items[2], scope));
    }
    if (op == "true" || op == "false" || op == "other" || op == "weak" || op == "strict") {
      fail(head, "'" + op + "' cannot head a formula");
    }
    return applied_atom(e, scope);
  }

  std::vector<Formula> formula_list(const SExpr& e, const VarScope& scope) {
    if (!e.is_list) fail(e, "expected a parenthesised formula list");
    std::vector<Formula> out;
    for (const auto& x : e.items) out.push_back(formula(x, scope));
    return out;
  }

 private:
  Formula bare_symbol(const SExpr& e) {
    if (e.symbol == "true") return f::top();
    if (e.symbol == "false") return f::bottom();
    const AtomDecl* d = sig_.find_atom(e.symbol);
    if (!d) fail_semantic(e, "undeclared atom " + e.symbol);
    if (!d->arg_sorts.empty()) {
      fail_semantic(e, "atom " + e.symbol + " expects " + std::to_string(d->arg_sorts.size()) +
                           " argument(s)");
    }
    return f::atom(e.symbol);
  }

  Formula applied_atom(const SExpr& e, const VarScope& scope) {
    const SExpr& head = e.items[0];
    const AtomDecl* d = sig_.find_atom(head.symbol);
    if (!d) fail_semantic(head, "undeclared atom or unknown operator " + head.symbol);
    const std::size_t argc = e.items.size() - 1;
    if (argc != d->arg_sorts.size()) {
      fail_semantic(e, "atom " + head.symbol + " expects " + std::to_string(d->arg_sorts.size()) +
                           " argument(s), got " + std::to_string(argc));
    }
    if (argc == 0) fail(e, "nullary atom " + head.symbol + " must be written without parentheses");
    std::vector<Term> args;
    for (std::size_t i = 1; i <= argc; ++i) {
      auto [t, sort] = term(e.items[i], scope);
      if (sort != d->arg_sorts[i - 1]) {
        fail_semantic(e.items[i], "argument " + std::to_string(i) + " of " + head.symbol +
                                      " has sort " + sort + ", expected " + d->arg_sorts[i - 1]);
      }
      args.push_back(std::move(t));
    }
    return f::atom(head.symbol, std::move(args));
  }

  std::pair<Term, std::string> term(const SExpr& e, const VarScope& scope) {
    if (e.is_list) {
      if (e.items.size() != 2 || !e.items[0].is_symbol("other")) {
        fail(e, "expected a constant, a variable or (other TERM)");
      }
      auto [inner, sort] = term(e.items[1], scope);
      if (sort != kContenderSort) fail_semantic(e, "other applies only to contender terms");
      inner.others += 1;
      return {inner, sort};
    }
    if (auto it = scope.find(e.symbol); it != scope.end()) return {Term{e.symbol, 0}, it->second};
    if (auto s = sig_.sort_of_constant(e.symbol)) return {Term{e.symbol, 0}, *s};
    fail_semantic(e, "undeclared constant or variable " + e.symbol);
  }

  Term party_term(const SExpr& e, const VarScope& scope) {
    auto [t, sort] = term(e, scope);
    if (sort != kContenderSort) fail_semantic(e, "expected a party (contender term)");
    return t;
  }

  AggItem agg_item(const SExpr& e, const VarScope& scope) {
    if (!e.is_list || e.items.size() != 2) fail(e, "expected (PRINCIPLE party)");
    return AggItem{principle_at(e.items[0]), party_term(e.items[1], scope)};
  }

  Principle principle_at(const SExpr& e) {
    const std::string s = symbol_at(e, "principle");
    auto p = principle_from_name(s);
    if (!p) fail(e, "unknown principle " + s);
    return *p;
  }

  bool strictness(const SExpr& e) {
    if (e.is_symbol("strict")) return true;
    if (e.is_symbol("weak")) return false;
    fail(e, "strictness must be weak or strict");
  }

  static std::string symbol_at(const SExpr& e, const char* what) {
    if (e.is_list) fail(e, std::string("expected ") + what);
    return e.symbol;
  }

  const Signature& sig_;
};

}  // namespace

std::vector<SExpr> read_sexprs(std::string_view text) { return Reader(text).read_all(); }

Formula formula_from_sexpr(const SExpr& e, const Signature& sig, const VarScope& scope) {
  return Converter(sig).formula(e, scope);
}

Formula parse_formula(std::string_view text, const Signature& sig) {
  auto forms = read_sexprs(text);
  if (forms.empty()) throw ParseError("empty input", 1, 1);
  if (forms.size() > 1) throw ParseError("trailing input after formula", forms[1].line, forms[1].column);
  return formula_from_sexpr(forms[0], sig);
}

}  // namespace prefkb
