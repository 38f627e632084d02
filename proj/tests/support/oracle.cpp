#include "oracle.hpp"

#include <cctype>
#include <stdexcept>

namespace prefkb::testing {

namespace {

bool weak(const PreferenceModel& m, int w, int v) { return m.betterness().test(w, v); }
bool strict(const PreferenceModel& m, int w, int v) { return weak(m, w, v) && !weak(m, v, w); }

bool agrees_on(const std::vector<Formula>& gamma, const PreferenceModel& m, int w, int v) {
  for (const auto& g : gamma) {
    if (ref_holds(g, m, w) != ref_holds(g, m, v)) return false;
  }
  return true;
}

}  // namespace

bool ref_holds(const Formula& f, const PreferenceModel& m, int w) {
  const Node& n = *f;
  const int size = m.size();
  auto child = [&](std::size_t i, int at) { return ref_holds(n.children[i], m, at); };
  switch (n.kind) {
    case NodeKind::Top: return true;
    case NodeKind::Bottom: return false;
    case NodeKind::Atom: {
      const Extension* e = m.atom(atom_key(n.name, n.args));
      return e && e->contains(w);
    }
    case NodeKind::Incidence: {
      auto x = party_from_name(n.args.at(0).name);
      if (!x || n.args[0].others != 0) throw std::invalid_argument("ungrounded incidence");
      return m.incidence(ValueSymbol{n.value, *x}).contains(w);
    }
    case NodeKind::Not: return !child(0, w);
    case NodeKind::And:
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (!child(i, w)) return false;
      }
      return true;
    case NodeKind::Or:
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (child(i, w)) return true;
      }
      return false;
    case NodeKind::Implies: return !child(0, w) || child(1, w);
    case NodeKind::Iff: return child(0, w) == child(1, w);
    case NodeKind::DiaLeq:
    case NodeKind::BoxLeq:
    case NodeKind::DiaLt:
    case NodeKind::BoxLt: {
      const bool is_strict = n.kind == NodeKind::DiaLt || n.kind == NodeKind::BoxLt;
      const bool is_dia = n.kind == NodeKind::DiaLeq || n.kind == NodeKind::DiaLt;
      for (int v = 0; v < size; ++v) {
        bool edge = is_strict ? strict(m, w, v) : weak(m, w, v);
        if (!edge) continue;
        if (is_dia && child(0, v)) return true;
        if (!is_dia && !child(0, v)) return false;
      }
      return !is_dia;
    }
    case NodeKind::GlobalE:
      for (int v = 0; v < size; ++v) {
        if (child(0, v)) return true;
      }
      return false;
    case NodeKind::GlobalA:
      for (int v = 0; v < size; ++v) {
        if (!child(0, v)) return false;
      }
      return true;
    case NodeKind::CpDiaLeq:
    case NodeKind::CpDiaLt: {
      const bool is_strict = n.kind == NodeKind::CpDiaLt;
      for (int v = 0; v < size; ++v) {
        bool edge = is_strict ? strict(m, w, v) : weak(m, w, v);
        if (edge && agrees_on(n.gamma, m, w, v) && child(0, v)) return true;
      }
      return false;
    }
    case NodeKind::CpPrefAA:
      // every lhs-world s and rhs-world t agreeing on gamma have s R t
      for (int s = 0; s < size; ++s) {
        if (!child(0, s)) continue;
        for (int t = 0; t < size; ++t) {
          if (!child(1, t) || !agrees_on(n.gamma, m, s, t)) continue;
          if (!(n.strict ? strict(m, s, t) : weak(m, s, t))) return false;
        }
      }
      return true;
    default:
      throw std::invalid_argument("reference evaluator needs core formulas");
  }
}

std::vector<bool> ref_extension(const Formula& f, const PreferenceModel& m) {
  std::vector<bool> out(static_cast<std::size_t>(m.size()));
  for (int w = 0; w < m.size(); ++w) out[w] = ref_holds(f, m, w);
  return out;
}

std::vector<PreferenceModel> all_valuations(const Relation& r, const std::vector<std::string>& atoms) {
  std::vector<PreferenceModel> out;
  const int n = r.n;
  const int bits = n * static_cast<int>(atoms.size());
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    PreferenceModel m(n);
    m.set_betterness(r);
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      std::uint64_t mask = (code >> (a * n)) & Extension::full_mask(n);
      m.set_atom(atoms[a], Extension(n, mask));
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Relation> ref_preorders(int n, bool total) {
  std::vector<Relation> out;
  const int cells = n * n;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code) {
    Relation r(n);
    for (int i = 0; i < cells; ++i) {
      if ((code >> i) & 1U) r.set(i / n, i % n);
    }
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      ok = r.test(a, a);
      for (int b = 0; b < n && ok; ++b) {
        if (total && !r.test(a, b) && !r.test(b, a)) ok = false;
        for (int c = 0; c < n && ok; ++c) {
          if (r.test(a, b) && r.test(b, c) && !r.test(a, c)) ok = false;
        }
      }
    }
    if (ok) out.push_back(r);
  }
  return out;
}

namespace {

struct DotLexer {
  const std::string& s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
      } else if (s.compare(i, 2, "//") == 0) {
        while (i < s.size() && s[i] != '\n') ++i;
      } else {
        break;
      }
    }
  }
  bool eat(const std::string& tok) {
    skip();
    if (s.compare(i, tok.size(), tok) == 0) {
      i += tok.size();
      return true;
    }
    return false;
  }
  bool id(std::string& out) {
    skip();
    out.clear();
    if (i < s.size() && s[i] == '"') {
      ++i;
      while (i < s.size() && s[i] != '"') {
        if (s[i] == '\\' && i + 1 < s.size()) ++i;
        out += s[i++];
      }
      if (i >= s.size()) return false;
      ++i;
      return true;
    }
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '.')) {
      out += s[i++];
    }
    return !out.empty();
  }
  bool attrs(std::map<std::string, std::string>& out) {
    if (!eat("[")) return true;
    while (!eat("]")) {
      std::string k, v;
      if (!id(k) || !eat("=") || !id(v)) return false;
      out[k] = v;
      eat(",");
      eat(";");
    }
    return true;
  }
};

}  // namespace

bool parse_dot(const std::string& text, DotGraph& out) {
  DotLexer lx{text};
  if (!lx.eat("digraph")) return false;
  if (!lx.id(out.name) || !lx.eat("{")) return false;
  while (!lx.eat("}")) {
    std::string a;
    if (!lx.id(a)) return false;
    if (lx.eat("->")) {
      std::string b;
      if (!lx.id(b)) return false;
      std::map<std::string, std::string> at;
      if (!lx.attrs(at)) return false;
      out.edges.emplace_back(a, b);
      out.edge_attrs.push_back(at);
    } else if (lx.eat("=")) {
      std::string v;  // graph attribute
      if (!lx.id(v)) return false;
    } else {
      std::map<std::string, std::string> at;
      if (!lx.attrs(at)) return false;
      if (a != "node" && a != "edge" && a != "graph") {
        out.nodes.push_back(a);
        out.node_attrs[a] = at;
      }
    }
    lx.eat(";");
  }
  lx.skip();
  return lx.i == text.size();
}

}  // namespace prefkb::testing
