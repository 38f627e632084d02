#include "prefkb/extension.hpp"

#include <stdexcept>

namespace prefkb {

Extension::Extension(int width, std::uint64_t bits) : width_(width), bits_(bits) {
  if (width < 0 || width > kMaxWorlds) {
    throw std::invalid_argument("extension width out of range: " + std::to_string(width));
  }
  bits_ &= full_mask(width);
}

Extension Extension::full(int width) { return Extension(width, full_mask(width)); }

Extension Extension::singleton(int width, int world) {
  Extension e(width);
  e.insert(world);
  return e;
}

void Extension::insert(int world) {
  if (world < 0 || world >= width_) throw std::out_of_range("world index out of range");
  bits_ |= std::uint64_t{1} << world;
}

void Extension::erase(int world) {
  if (world < 0 || world >= width_) throw std::out_of_range("world index out of range");
  bits_ &= ~(std::uint64_t{1} << world);
}

void Extension::require_same_width(const Extension& o) const {
  if (width_ != o.width_) {
    throw std::invalid_argument("extension width mismatch: " + std::to_string(width_) +
                                " vs " + std::to_string(o.width_));
  }
}

Extension Extension::operator&(const Extension& o) const {
  require_same_width(o);
  return Extension(width_, bits_ & o.bits_);
}

Extension Extension::operator|(const Extension& o) const {
  require_same_width(o);
  return Extension(width_, bits_ | o.bits_);
}

Extension Extension::operator-(const Extension& o) const {
  require_same_width(o);
  return Extension(width_, bits_ & ~o.bits_);
}

bool Extension::subset_of(const Extension& o) const {
  require_same_width(o);
  return (bits_ & ~o.bits_) == 0;
}

std::vector<int> Extension::worlds() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string Extension::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int w : worlds()) {
    if (!first) s += ",";
    s += std::to_string(w);
    first = false;
  }
  return s + "}";
}

}  // namespace prefkb
