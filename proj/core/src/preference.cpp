#include "prefkb/preference.hpp"

#include <stdexcept>

#include "prefkb/errors.hpp"

namespace prefkb {

std::vector<Lift> all_lifts() {
  std::vector<Lift> out;
  for (bool strict : {false, true}) {
    for (LiftPattern p : {LiftPattern::EE, LiftPattern::EA, LiftPattern::AE, LiftPattern::AA}) {
      out.push_back({p, strict});
    }
  }
  return out;
}

bool sem_lift(Lift lift, const Extension& a, const Extension& b, const Relation& weak,
              const Relation& strict) {
  if (a.width() != weak.n || b.width() != weak.n) {
    throw std::invalid_argument("sem_lift: extension width does not match the model");
  }
  const Relation& r = lift.strict ? strict : weak;
  const std::uint64_t bb = b.bits();
  switch (lift.pattern) {
    case LiftPattern::EE:
      for (int s : a.worlds()) {
        if (r.rows[s] & bb) return true;
      }
      return false;
    case LiftPattern::EA:
      for (int t : b.worlds()) {
        bool all = true;
        for (int s : a.worlds()) all = all && r.test(s, t);
        if (all) return true;
      }
      return false;
    case LiftPattern::AE:
      for (int s : a.worlds()) {
        if ((r.rows[s] & bb) == 0) return false;
      }
      return true;
    case LiftPattern::AA:
      for (int s : a.worlds()) {
        if ((r.rows[s] & bb) != bb) return false;
      }
      return true;
  }
  return false;
}

bool sem_lift(Lift lift, const Extension& a, const Extension& b, const PreferenceModel& m) {
  return sem_lift(lift, a, b, m.betterness(), m.strict_betterness());
}

Relation cp_agreement(const std::vector<Extension>& gamma, int n) {
  for (const auto& g : gamma) {
    if (g.width() != n) throw std::invalid_argument("cp_agreement: width mismatch");
  }
  Relation out(n);
  for (int w = 0; w < n; ++w) {
    for (int v = 0; v < n; ++v) {
      bool agree = true;
      for (const auto& g : gamma) agree = agree && (g.contains(w) == g.contains(v));
      if (agree) out.set(w, v);
    }
  }
  return out;
}

RelationPair cp_relation(const std::vector<Extension>& gamma, const PreferenceModel& m) {
  const int n = m.size();
  const Relation same = cp_agreement(gamma, n);
  const Relation strict = m.strict_betterness();
  RelationPair out{Relation(n), Relation(n)};
  for (int w = 0; w < n; ++w) {
    out.weak.rows[w] = m.betterness().rows[w] & same.rows[w];
    out.strict.rows[w] = strict.rows[w] & same.rows[w];
  }
  return out;
}

bool cp_pref_aa(bool strict, const Extension& a, const Extension& b, const std::vector<Extension>& gamma,
                const PreferenceModel& m) {
  const Relation same = cp_agreement(gamma, m.size());
  const Relation r = strict ? m.strict_betterness() : m.betterness();
  for (int s : a.worlds()) {
    const std::uint64_t targets = b.bits() & same.rows[s];
    if ((r.rows[s] & targets) != targets) return false;
  }
  return true;
}

RelationPair cp_relation(const std::vector<Formula>& gamma, const PreferenceModel& m) {
  Evaluator ev(m);
  std::vector<Extension> exts;
  for (const auto& g : gamma) exts.push_back(ev.eval(g));
  return cp_relation(exts, m);
}

Extension cp_eval(const Node& node, Evaluator& ev) {
  const PreferenceModel& m = ev.model();
  std::vector<Extension> exts;
  for (const auto& g : node.gamma) exts.push_back(ev.eval(g));
  RelationPair rel = cp_relation(exts, m);
  switch (node.kind) {
    case NodeKind::CpDiaLeq: return diamond(rel.weak, ev.eval(node.children[0]));
    case NodeKind::CpDiaLt: return diamond(rel.strict, ev.eval(node.children[0]));
    case NodeKind::CpPrefAA: {
      bool holds = cp_pref_aa(node.strict, ev.eval(node.children[0]), ev.eval(node.children[1]), exts, m);
      return holds ? Extension::full(m.size()) : Extension::empty(m.size());
    }
    default:
      throw SemanticError("cp_eval expects a ceteris paribus node");
  }
}

Extension cp_eval(const Formula& node, const PreferenceModel& m) {
  Evaluator ev(m);
  return cp_eval(*node, ev);
}

bool halpern_more_likely(const Extension& a, const Extension& b, const PreferenceModel& m) {
  if (a.width() != m.size() || b.width() != m.size()) {
    throw std::invalid_argument("halpern_more_likely: width mismatch");
  }
  for (int s : a.worlds()) {
    bool witnessed = false;
    for (int v : b.worlds()) {
      if (!m.lt(s, v)) continue;
      bool dominated = false;
      for (int u : a.worlds()) dominated = dominated || m.lt(v, u);
      if (!dominated) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) return false;
  }
  return true;
}

Extension best_worlds(const Extension& a, const PreferenceModel& m) {
  if (a.width() != m.size()) throw std::invalid_argument("best_worlds: width mismatch");
  Extension out(m.size());
  for (int w : a.worlds()) {
    bool beaten = false;
    for (int v : a.worlds()) beaten = beaten || m.lt(w, v);
    if (!beaten) out.insert(w);
  }
  return out;
}

}  // namespace prefkb
