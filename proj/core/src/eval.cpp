#include "prefkb/eval.hpp"

#include "prefkb/errors.hpp"
#include "prefkb/preference.hpp"

namespace prefkb {

Evaluator::Evaluator(const PreferenceModel& m)
    : model_(m), weak_(m.betterness()), strict_(m.strict_betterness()) {}

Extension Evaluator::eval(const Formula& f) {
  if (auto it = memo_.find(f.get()); it != memo_.end()) return it->second;
  // Keep the root alive so its address cannot be reused while memoised.
  pinned_.push_back(f);
  Extension e = compute(*f);
  memo_.emplace(f.get(), e);
  return e;
}

Extension Evaluator::compute(const Node& n) {
  const int size = model_.size();
  auto sub = [&](std::size_t i) { return eval(n.children[i]); };
  switch (n.kind) {
    case NodeKind::Top: return Extension::full(size);
    case NodeKind::Bottom: return Extension::empty(size);
    case NodeKind::Atom: {
      const std::string key = atom_key(n.name, n.args);
      const Extension* e = model_.atom(key);
      if (!e) throw SemanticError("atom not interpreted by the model: " + key);
      return *e;
    }
    case NodeKind::Incidence: {
      auto party = party_from_name(n.args[0].name);
      if (!party || n.args[0].others != 0) {
        throw SemanticError("ungrounded party in incidence atom");
      }
      return model_.incidence({n.value, *party});
    }
    case NodeKind::Not: return ~sub(0);
    case NodeKind::And: {
      Extension e = Extension::full(size);
      for (std::size_t i = 0; i < n.children.size(); ++i) e &= sub(i);
      return e;
    }
    case NodeKind::Or: {
      Extension e = Extension::empty(size);
      for (std::size_t i = 0; i < n.children.size(); ++i) e |= sub(i);
      return e;
    }
    case NodeKind::Implies: return ~sub(0) | sub(1);
    case NodeKind::Iff: {
      Extension a = sub(0);
      Extension b = sub(1);
      return (a & b) | (~a & ~b);
    }
    case NodeKind::DiaLeq: return diamond(weak_, sub(0));
    case NodeKind::BoxLeq: return ~diamond(weak_, ~sub(0));
    case NodeKind::DiaLt: return diamond(strict_, sub(0));
    case NodeKind::BoxLt: return ~diamond(strict_, ~sub(0));
    case NodeKind::GlobalE:
      return sub(0).is_empty() ? Extension::empty(size) : Extension::full(size);
    case NodeKind::GlobalA:
      return sub(0).is_full() ? Extension::full(size) : Extension::empty(size);
    case NodeKind::CpDiaLeq:
    case NodeKind::CpDiaLt:
    case NodeKind::CpPrefAA:
      return cp_eval(n, *this);
    default:
      throw SemanticError("evaluator received a non-core formula: " +
                          print(std::make_shared<const Node>(n)));
  }
}

Extension eval(const Formula& f, const PreferenceModel& m) {
  Evaluator ev(m);
  return ev.eval(f);
}

bool globally_true(const Formula& f, const PreferenceModel& m) { return eval(f, m).is_full(); }

}  // namespace prefkb
