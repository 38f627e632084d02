#include "prefkb/values.hpp"

namespace prefkb {

std::string_view party_name(Party x) { return x == Party::P ? "p" : "d"; }

std::optional<Party> party_from_name(std::string_view s) {
  if (s == "p") return Party::P;
  if (s == "d") return Party::D;
  return std::nullopt;
}

std::string_view basic_value_name(BasicValue v) {
  switch (v) {
    case BasicValue::Freedom: return "FREEDOM";
    case BasicValue::Utility: return "UTILITY";
    case BasicValue::Security: return "SECURITY";
    case BasicValue::Equality: return "EQUALITY";
  }
  return "?";
}

std::optional<BasicValue> basic_value_from_name(std::string_view s) {
  for (BasicValue v : kBasicValues) {
    if (basic_value_name(v) == s) return v;
  }
  return std::nullopt;
}

std::string_view principle_name(Principle p) {
  switch (p) {
    case Principle::WILL: return "WILL";
    case Principle::RESP: return "RESP";
    case Principle::STAB: return "STAB";
    case Principle::RELI: return "RELI";
    case Principle::EFFI: return "EFFI";
    case Principle::GAIN: return "GAIN";
    case Principle::FAIR: return "FAIR";
    case Principle::EQUI: return "EQUI";
  }
  return "?";
}

std::optional<Principle> principle_from_name(std::string_view s) {
  for (Principle p : kPrinciples) {
    if (principle_name(p) == s) return p;
  }
  return std::nullopt;
}

std::array<BasicValue, 2> principle_values(Principle p) {
  using enum BasicValue;
  switch (p) {
    case Principle::WILL: return {Freedom, Utility};
    case Principle::RESP: return {Freedom, Equality};
    case Principle::STAB: return {Security, Utility};
    case Principle::RELI: return {Security, Equality};
    case Principle::EFFI: return {Utility, Security};
    case Principle::GAIN: return {Utility, Freedom};
    case Principle::FAIR: return {Equality, Freedom};
    case Principle::EQUI: return {Equality, Security};
  }
  return {Freedom, Freedom};
}

std::string ValueSymbol::to_string() const {
  return "(" + std::string(basic_value_name(value)) + "," + std::string(party_name(party)) + ")";
}

ValueSet ValueSet::all() { return ValueSet(std::bitset<kValueSymbolCount>().set()); }

ValueSet ValueSet::of(Principle p, Party x) {
  ValueSet s;
  for (BasicValue v : principle_values(p)) s.insert({v, x});
  return s;
}

ValueSet ValueSet::of_bits(std::uint8_t bits) {
  return ValueSet(std::bitset<kValueSymbolCount>(bits));
}

std::string ValueSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < kValueSymbolCount; ++i) {
    if (!bits_.test(i)) continue;
    if (!first) s += ",";
    s += ValueSymbol::from_index(i).to_string();
    first = false;
  }
  return s + "}";
}

}  // namespace prefkb
