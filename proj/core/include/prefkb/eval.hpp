#pragma once

#include <unordered_map>

#include "prefkb/formula.hpp"
#include "prefkb/model.hpp"

namespace prefkb {

/// Computes extensions of grounded, desugared formulas over one model.
/// Subformula results are memoised per node for the evaluator's lifetime,
/// so shared subterms are evaluated once.
class Evaluator {
 public:
  explicit Evaluator(const PreferenceModel& m);

  Extension eval(const Formula& f);
  const PreferenceModel& model() const { return model_; }
  const Relation& weak() const { return weak_; }
  const Relation& strict() const { return strict_; }

 private:
  Extension compute(const Node& n);

  const PreferenceModel& model_;
  Relation weak_;
  Relation strict_;
  std::unordered_map<const Node*, Extension> memo_;
  std::vector<Formula> pinned_;
};

Extension eval(const Formula& f, const PreferenceModel& m);

/// True iff `f` holds at every world of `m`.
bool globally_true(const Formula& f, const PreferenceModel& m);

}  // namespace prefkb
