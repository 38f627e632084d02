#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace prefkb {

/// A legal party. The contender sort is fixed to plaintiff and defendant.
enum class Party : std::uint8_t { P = 0, D = 1 };

inline constexpr std::array<Party, 2> kParties{Party::P, Party::D};

constexpr Party other(Party x) { return x == Party::P ? Party::D : Party::P; }
std::string_view party_name(Party x);
std::optional<Party> party_from_name(std::string_view s);

enum class BasicValue : std::uint8_t { Freedom = 0, Utility = 1, Security = 2, Equality = 3 };

inline constexpr std::array<BasicValue, 4> kBasicValues{
    BasicValue::Freedom, BasicValue::Utility, BasicValue::Security, BasicValue::Equality};

std::string_view basic_value_name(BasicValue v);
std::optional<BasicValue> basic_value_from_name(std::string_view s);

enum class Principle : std::uint8_t { WILL, RESP, STAB, RELI, EFFI, GAIN, FAIR, EQUI };

inline constexpr std::array<Principle, 8> kPrinciples{
    Principle::WILL, Principle::RESP, Principle::STAB, Principle::RELI,
    Principle::EFFI, Principle::GAIN, Principle::FAIR, Principle::EQUI};

std::string_view principle_name(Principle p);
std::optional<Principle> principle_from_name(std::string_view s);

/// Basic values making up a principle. Principles are plain value sets, so
/// STAB/EFFI, WILL/GAIN, RESP/FAIR and RELI/EQUI coincide.
std::array<BasicValue, 2> principle_values(Principle p);

/// An incidence attribute: a basic value relative to a party.
struct ValueSymbol {
  BasicValue value;
  Party party;

  int index() const { return static_cast<int>(value) * 2 + static_cast<int>(party); }
  static ValueSymbol from_index(int i) {
    return {static_cast<BasicValue>(i / 2), static_cast<Party>(i % 2)};
  }
  bool operator==(const ValueSymbol&) const = default;
  std::string to_string() const;
};

inline constexpr int kValueSymbolCount = 8;

/// A set of value symbols (an FCA intent).
class ValueSet {
 public:
  ValueSet() = default;
  static ValueSet all();
  static ValueSet of(Principle p, Party x);
  static ValueSet of_bits(std::uint8_t bits);

  void insert(ValueSymbol v) { bits_.set(v.index()); }
  bool contains(ValueSymbol v) const { return bits_.test(v.index()); }
  bool empty() const { return bits_.none(); }
  std::size_t size() const { return bits_.count(); }
  std::uint8_t bits() const { return static_cast<std::uint8_t>(bits_.to_ulong()); }

  ValueSet operator&(const ValueSet& o) const { return ValueSet(bits_ & o.bits_); }
  ValueSet operator|(const ValueSet& o) const { return ValueSet(bits_ | o.bits_); }
  bool subset_of(const ValueSet& o) const { return (bits_ & ~o.bits_).none(); }
  bool operator==(const ValueSet&) const = default;

  std::string to_string() const;

 private:
  explicit ValueSet(std::bitset<kValueSymbolCount> b) : bits_(b) {}
  std::bitset<kValueSymbolCount> bits_;
};

}  // namespace prefkb
