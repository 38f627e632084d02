#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace prefkb {

/// Maximum number of worlds a single model may carry.
inline constexpr int kMaxWorlds = 62;

/// A set of worlds of a fixed-size model, stored as a bit mask.
///
/// Every binary operation requires both operands to have the same width;
/// mixing widths throws std::invalid_argument.
class Extension {
 public:
  Extension() = default;
  explicit Extension(int width, std::uint64_t bits = 0);

  static Extension empty(int width) { return Extension(width, 0); }
  static Extension full(int width);
  static Extension singleton(int width, int world);

  int width() const { return width_; }
  std::uint64_t bits() const { return bits_; }

  bool contains(int world) const { return (bits_ >> world) & 1U; }
  bool is_empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == full_mask(width_); }
  int count() const { return std::popcount(bits_); }

  void insert(int world);
  void erase(int world);

  Extension complement() const { return Extension(width_, ~bits_ & full_mask(width_)); }
  Extension operator&(const Extension& o) const;
  Extension operator|(const Extension& o) const;
  Extension operator-(const Extension& o) const;
  Extension operator~() const { return complement(); }
  Extension& operator&=(const Extension& o) { return *this = *this & o; }
  Extension& operator|=(const Extension& o) { return *this = *this | o; }

  bool subset_of(const Extension& o) const;
  bool operator==(const Extension& o) const = default;

  std::vector<int> worlds() const;
  /// "{0,2}" style rendering.
  std::string to_string() const;

  static std::uint64_t full_mask(int width) {
    return width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
  }

 private:
  void require_same_width(const Extension& o) const;

  int width_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace prefkb
