#include "prefkb/model.hpp"

#include <sstream>

#include "prefkb/errors.hpp"

namespace prefkb {

Relation Relation::identity(int size) {
  Relation r(size);
  for (int w = 0; w < size; ++w) r.set(w, w);
  return r;
}

void Relation::set(int w, int v, bool on) {
  if (w < 0 || w >= n || v < 0 || v >= n) throw std::out_of_range("relation index out of range");
  if (on) {
    rows[w] |= std::uint64_t{1} << v;
  } else {
    rows[w] &= ~(std::uint64_t{1} << v);
  }
}

Extension diamond(const Relation& r, const Extension& target) {
  if (target.width() != r.n) throw std::invalid_argument("diamond: width mismatch");
  Extension out(r.n);
  for (int w = 0; w < r.n; ++w) {
    if (r.rows[w] & target.bits()) out.insert(w);
  }
  return out;
}

void check_frame_options(const FrameOptions& frame) {
  if (frame.serial) {
    throw ConfigError(
        "seriality of the strict betterness relation is not supported: the strict part of a "
        "finite preorder is acyclic, so every finite model has a world with no strictly "
        "better successor");
  }
}

PreferenceModel::PreferenceModel(int n) : betterness_(Relation::identity(n)) {
  if (n < 1 || n > kMaxWorlds) throw std::invalid_argument("model size out of range");
  incidence_.fill(Extension::empty(n));
}

void PreferenceModel::set_betterness(Relation r) {
  if (r.n != size()) throw std::invalid_argument("relation size mismatch");
  betterness_ = std::move(r);
}

Relation PreferenceModel::strict_betterness() const {
  Relation s(size());
  for (int w = 0; w < size(); ++w) {
    for (int v = 0; v < size(); ++v) {
      if (lt(w, v)) s.set(w, v);
    }
  }
  return s;
}

void PreferenceModel::set_atom(const std::string& key, Extension e) { valuation_[key] = e; }

const Extension* PreferenceModel::atom(const std::string& key) const {
  auto it = valuation_.find(key);
  return it == valuation_.end() ? nullptr : &it->second;
}

void PreferenceModel::set_incidence(ValueSymbol v, Extension e) { incidence_[v.index()] = e; }

std::string ModelViolation::to_string() const {
  std::string s = property;
  if (w >= 0) {
    s += " violated at (" + std::to_string(w);
    if (v >= 0) s += "," + std::to_string(v);
    s += ")";
  }
  return s;
}

std::optional<ModelViolation> validate_model(const PreferenceModel& m) {
  const int n = m.size();
  for (const auto& [key, ext] : m.valuation()) {
    if (ext.width() != n) return ModelViolation{"width of atom " + key, -1, -1};
  }
  for (int i = 0; i < kValueSymbolCount; ++i) {
    if (m.incidence(ValueSymbol::from_index(i)).width() != n) {
      return ModelViolation{"width of incidence " + ValueSymbol::from_index(i).to_string(), -1, -1};
    }
  }
  for (int w = 0; w < n; ++w) {
    if (!m.leq(w, w)) return ModelViolation{"reflexivity", w, w};
  }
  for (int w = 0; w < n; ++w) {
    for (int v = 0; v < n; ++v) {
      if (!m.leq(w, v)) continue;
      for (int u = 0; u < n; ++u) {
        if (m.leq(v, u) && !m.leq(w, u)) return ModelViolation{"transitivity", w, u};
      }
    }
  }
  if (m.total_flag()) {
    for (int w = 0; w < n; ++w) {
      for (int v = 0; v < n; ++v) {
        if (!m.leq(w, v) && !m.leq(v, w)) return ModelViolation{"totality", w, v};
      }
    }
  }
  return std::nullopt;
}

namespace {

std::vector<std::string> true_atoms(const PreferenceModel& m, int w) {
  std::vector<std::string> out;
  for (const auto& [key, ext] : m.valuation()) {
    if (ext.contains(w)) out.push_back(key);
  }
  return out;
}

std::vector<std::string> true_values(const PreferenceModel& m, int w) {
  std::vector<std::string> out;
  for (int i = 0; i < kValueSymbolCount; ++i) {
    ValueSymbol v = ValueSymbol::from_index(i);
    if (m.incidence(v).contains(w)) out.push_back(v.to_string());
  }
  return out;
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += xs[i];
  }
  return s;
}

}  // namespace

std::string render_text(const PreferenceModel& m) {
  std::ostringstream os;
  for (int w = 0; w < m.size(); ++w) {
    std::vector<std::string> succ;
    for (int v = 0; v < m.size(); ++v) {
      if (v != w && m.leq(w, v)) succ.push_back("w" + std::to_string(v));
    }
    os << "w" << w << ": succ = {" << join(succ, ",") << "} atoms = {"
       << join(true_atoms(m, w), ", ") << "} values = {" << join(true_values(m, w), "") << "}\n";
  }
  return os.str();
}

std::string render_dot(const PreferenceModel& m, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int w = 0; w < m.size(); ++w) {
    std::string label = "w" + std::to_string(w);
    auto atoms = true_atoms(m, w);
    auto values = true_values(m, w);
    if (!atoms.empty()) label += "\\n" + join(atoms, ", ");
    if (!values.empty()) label += "\\n" + join(values, "");
    os << "  w" << w << " [label=\"" << label << "\"];\n";
  }
  for (int w = 0; w < m.size(); ++w) {
    for (int v = 0; v < m.size(); ++v) {
      if (v == w || !m.leq(w, v)) continue;
      os << "  w" << w << " -> w" << v;
      if (m.lt(w, v)) os << " [style=bold]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace prefkb
