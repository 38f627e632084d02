#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prefkb/extension.hpp"
#include "prefkb/values.hpp"

namespace prefkb {

/// A binary relation over the worlds 0..n-1 as one bit row per world.
struct Relation {
  int n = 0;
  std::vector<std::uint64_t> rows;

  explicit Relation(int size = 0) : n(size), rows(static_cast<std::size_t>(size), 0) {}
  static Relation identity(int size);

  bool test(int w, int v) const { return (rows[w] >> v) & 1U; }
  void set(int w, int v, bool on = true);
  Extension row(int w) const { return Extension(n, rows[w]); }
  bool operator==(const Relation&) const = default;
};

/// Extension of worlds with a relation-successor in `target`.
Extension diamond(const Relation& r, const Extension& target);

/// Frame conditions on top of the preorder postulates.
struct FrameOptions {
  bool total = false;
  /// Seriality of the strict relation. No finite preorder satisfies it, so
  /// requesting it raises ConfigError.
  bool serial = false;
};

void check_frame_options(const FrameOptions& frame);

/// A finite preference model: worlds, betterness preorder (w ≼ v reads "v is
/// at least as good as w"), atom valuation and value incidence.
class PreferenceModel {
 public:
  explicit PreferenceModel(int n = 1);

  int size() const { return betterness_.n; }

  bool leq(int w, int v) const { return betterness_.test(w, v); }
  /// Derived strict part: w ≺ v iff w ≼ v and not v ≼ w.
  bool lt(int w, int v) const { return leq(w, v) && !leq(v, w); }
  void set_leq(int w, int v, bool on = true) { betterness_.set(w, v, on); }

  const Relation& betterness() const { return betterness_; }
  void set_betterness(Relation r);
  Relation strict_betterness() const;

  void set_atom(const std::string& key, Extension e);
  const Extension* atom(const std::string& key) const;
  const std::map<std::string, Extension>& valuation() const { return valuation_; }

  Extension incidence(ValueSymbol v) const { return incidence_[v.index()]; }
  void set_incidence(ValueSymbol v, Extension e);

  bool total_flag() const { return total_; }
  void set_total_flag(bool on) { total_ = on; }

  bool operator==(const PreferenceModel&) const = default;

 private:
  Relation betterness_;
  std::map<std::string, Extension> valuation_;
  std::array<Extension, kValueSymbolCount> incidence_;
  bool total_ = false;
};

struct ModelViolation {
  std::string property;  // "reflexivity", "transitivity", "totality", "width"
  int w = -1;
  int v = -1;
  std::string to_string() const;
};

/// First violated postulate, or nullopt when the model is well formed.
std::optional<ModelViolation> validate_model(const PreferenceModel& m);

/// One line per world: succ (non-reflexive ≼ edges), true atoms, values.
std::string render_text(const PreferenceModel& m);

/// Graphviz rendering; reflexive loops are omitted and strict edges bold.
std::string render_dot(const PreferenceModel& m, const std::string& name = "model");

}  // namespace prefkb
