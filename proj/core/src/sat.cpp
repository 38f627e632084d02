#include "prefkb/sat.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

namespace prefkb {

namespace {

// Internal literal: 2*var + (negative ? 1 : 0), vars 0-based.
inline int to_internal(int dimacs) {
  int v = std::abs(dimacs) - 1;
  return 2 * v + (dimacs < 0 ? 1 : 0);
}
inline int neg(int lit) { return lit ^ 1; }
inline int var_of(int lit) { return lit >> 1; }

long luby(long i) {
  // Index from 1: 1 1 2 1 1 2 4 ...
  long k = 1;
  while ((1L << k) - 1 < i) ++k;
  while (i != (1L << k) - 1) {
    i -= (1L << (k - 1)) - 1;
    k = 1;
    while ((1L << k) - 1 < i) ++k;
  }
  return 1L << (k - 1);
}

class Solver {
 public:
  Solver(const CnfInstance& cnf, std::uint64_t seed) : nvars_(cnf.num_vars) {
    value_.assign(nvars_, -1);
    level_.assign(nvars_, 0);
    reason_.assign(nvars_, -1);
    activity_.assign(nvars_, 0.0);
    phase_.assign(nvars_, 0);
    seen_.assign(nvars_, 0);
    watches_.resize(2 * static_cast<std::size_t>(nvars_));
    if (seed != 0) {
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> d(0.0, 1e-6);
      for (auto& a : activity_) a = d(rng);
    }
    for (const auto& c : cnf.clauses) {
      if (!add_input(c)) ok_ = false;
      if (!ok_) break;
    }
  }

  SatResult run(const SatBudget& budget) {
    SatResult res;
    if (!ok_ || propagate() != -1) {
      res.status = SatStatus::Unsat;
      res.stats = stats_;
      return res;
    }
    long restart_index = 1;
    long until_restart = 100 * luby(restart_index);
    while (true) {
      int conflict = propagate();
      if (conflict != -1) {
        ++stats_.conflicts;
        if (decision_level() == 0) {
          res.status = SatStatus::Unsat;
          break;
        }
        int back = 0;
        std::vector<int> learnt = analyze(conflict, back);
        backtrack(back);
        if (learnt.size() == 1) {
          enqueue(learnt[0], -1);
        } else {
          int ci = static_cast<int>(clauses_.size());
          clauses_.push_back(learnt);
          watches_[learnt[0]].push_back(ci);
          watches_[learnt[1]].push_back(ci);
          enqueue(learnt[0], ci);
        }
        var_inc_ *= 1.0 / 0.95;
        if (var_inc_ > 1e100) {
          for (auto& a : activity_) a *= 1e-100;
          var_inc_ *= 1e-100;
        }
        if (budget.max_conflicts > 0 && stats_.conflicts >= budget.max_conflicts) break;
        if (budget.deadline && (stats_.conflicts & 63) == 0 &&
            std::chrono::steady_clock::now() > *budget.deadline) {
          break;
        }
        if (--until_restart <= 0) {
          backtrack(0);
          until_restart = 100 * luby(++restart_index);
        }
        continue;
      }
      int next = pick_branch();
      if (next < 0) {
        res.status = SatStatus::Sat;
        res.model.assign(nvars_ + 1, false);
        for (int v = 0; v < nvars_; ++v) res.model[v + 1] = value_[v] == 1;
        break;
      }
      if (budget.deadline && (stats_.decisions & 1023) == 0 &&
          std::chrono::steady_clock::now() > *budget.deadline) {
        break;
      }
      ++stats_.decisions;
      trail_lim_.push_back(static_cast<int>(trail_.size()));
      enqueue(next, -1);
    }
    res.stats = stats_;
    return res;
  }

 private:
  // 1 true, 0 false, -1 unassigned.
  int lit_value(int lit) const {
    int v = value_[var_of(lit)];
    if (v < 0) return -1;
    return (lit & 1) ? 1 - v : v;
  }

  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  bool add_input(const std::vector<int>& dimacs) {
    std::vector<int> c;
    for (int d : dimacs) c.push_back(to_internal(d));
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      if (c[i + 1] == neg(c[i]) && var_of(c[i]) == var_of(c[i + 1])) return true;  // tautology
    }
    // Drop literals already false at level 0, keep if any true.
    std::vector<int> kept;
    for (int l : c) {
      int val = lit_value(l);
      if (val == 1) return true;
      if (val == -1) kept.push_back(l);
    }
    if (kept.empty()) return false;
    if (kept.size() == 1) {
      enqueue(kept[0], -1);
      return propagate() == -1;
    }
    int ci = static_cast<int>(clauses_.size());
    clauses_.push_back(kept);
    watches_[kept[0]].push_back(ci);
    watches_[kept[1]].push_back(ci);
    return true;
  }

  void enqueue(int lit, int reason) {
    int v = var_of(lit);
    value_[v] = (lit & 1) ? 0 : 1;
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(lit);
  }

  // Returns conflicting clause index or -1.
  int propagate() {
    while (qhead_ < trail_.size()) {
      int p = trail_[qhead_++];
      int false_lit = neg(p);
      ++stats_.propagations;
      auto& ws = watches_[false_lit];
      std::size_t i = 0, j = 0;
      while (i < ws.size()) {
        int ci = ws[i++];
        auto& c = clauses_[ci];
        if (c[0] == false_lit) std::swap(c[0], c[1]);
        if (lit_value(c[0]) == 1) {
          ws[j++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k) {
          if (lit_value(c[k]) != 0) {
            std::swap(c[1], c[k]);
            watches_[c[1]].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = ci;
        if (lit_value(c[0]) == 0) {
          while (i < ws.size()) ws[j++] = ws[i++];
          ws.resize(j);
          qhead_ = trail_.size();
          return ci;
        }
        enqueue(c[0], ci);
      }
      ws.resize(j);
    }
    return -1;
  }

  void bump(int v) {
    activity_[v] += var_inc_;
  }

  std::vector<int> analyze(int conflict, int& back_level) {
    std::vector<int> learnt{-1};
    int pending = 0;
    int p = -1;
    std::size_t idx = trail_.size();
    int ci = conflict;
    do {
      const auto& c = clauses_[ci];
      for (std::size_t k = (p == -1 ? 0 : 1); k < c.size(); ++k) {
        int q = c[k];
        int v = var_of(q);
        if (seen_[v] || level_[v] == 0) continue;
        seen_[v] = 1;
        bump(v);
        if (level_[v] == decision_level()) {
          ++pending;
        } else {
          learnt.push_back(q);
        }
      }
      do {
        --idx;
      } while (!seen_[var_of(trail_[idx])]);
      p = trail_[idx];
      ci = reason_[var_of(p)];
      seen_[var_of(p)] = 0;
      --pending;
    } while (pending > 0);
    learnt[0] = neg(p);

    back_level = 0;
    std::size_t max_i = 1;
    for (std::size_t k = 1; k < learnt.size(); ++k) {
      int lv = level_[var_of(learnt[k])];
      if (lv > back_level) {
        back_level = lv;
        max_i = k;
      }
    }
    if (learnt.size() > 1) std::swap(learnt[1], learnt[max_i]);
    for (std::size_t k = 1; k < learnt.size(); ++k) seen_[var_of(learnt[k])] = 0;
    return learnt;
  }

  void backtrack(int lvl) {
    if (decision_level() <= lvl) return;
    for (std::size_t k = trail_.size(); k-- > static_cast<std::size_t>(trail_lim_[lvl]);) {
      int v = var_of(trail_[k]);
      phase_[v] = value_[v];
      value_[v] = -1;
      reason_[v] = -1;
    }
    trail_.resize(trail_lim_[lvl]);
    trail_lim_.resize(lvl);
    qhead_ = trail_.size();
  }

  int pick_branch() const {
    int best = -1;
    for (int v = 0; v < nvars_; ++v) {
      if (value_[v] != -1) continue;
      if (best < 0 || activity_[v] > activity_[best]) best = v;
    }
    if (best < 0) return -1;
    return 2 * best + (phase_[best] == 1 ? 0 : 1);
  }

  int nvars_;
  bool ok_ = true;
  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<int>> watches_;
  std::vector<int> value_, level_, reason_, phase_;
  std::vector<char> seen_;
  std::vector<double> activity_;
  double var_inc_ = 1.0;
  std::vector<int> trail_, trail_lim_;
  std::size_t qhead_ = 0;
  SatStats stats_;
};

}  // namespace

SatResult sat_solve(const CnfInstance& cnf, std::uint64_t seed, const SatBudget& budget) {
  Solver s(cnf, seed);
  return s.run(budget);
}

}  // namespace prefkb
