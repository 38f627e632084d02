#pragma once

#include <optional>
#include <string>
#include <vector>

namespace prefkb {

inline constexpr const char* kContenderSort = "contender";

struct SortDecl {
  std::string name;
  std::vector<std::string> constants;
};

struct AtomDecl {
  std::string name;
  std::vector<std::string> arg_sorts;
};

/// Declared sorts and atoms. Always contains the contender sort {p, d} and
/// the decision atom For(contender).
class Signature {
 public:
  Signature();

  /// Declares a sort or extends an existing one with new constants.
  void add_sort(const std::string& name, const std::vector<std::string>& constants);
  /// Declares an atom; redeclaring with identical argument sorts is a no-op.
  void add_atom(const std::string& name, const std::vector<std::string>& arg_sorts);
  void merge(const Signature& other);

  const SortDecl* find_sort(const std::string& name) const;
  const AtomDecl* find_atom(const std::string& name) const;
  std::optional<std::string> sort_of_constant(const std::string& name) const;

  const std::vector<SortDecl>& sorts() const { return sorts_; }
  const std::vector<AtomDecl>& atoms() const { return atoms_; }

  /// Keys of every ground atom instance, in declaration order.
  std::vector<std::string> ground_atom_keys() const;

 private:
  std::vector<SortDecl> sorts_;
  std::vector<AtomDecl> atoms_;
};

/// True for words the grammar reserves as operators or literals.
bool is_reserved_word(const std::string& s);

}  // namespace prefkb
