#pragma once

// The answering phase. Once the argumentation phase is solved, answers play
// a symmetric zero-sum matrix game whose optimal answers are exactly the
// interval [value_up_down, value_down_up].

#include <vector>

namespace debate {

struct MinimaxResult;

class AnswerInterval {
 public:
  // Throws std::invalid_argument unless 0 <= lo <= hi <= 1.
  AnswerInterval(double lo, double hi);
  explicit AnswerInterval(const MinimaxResult& result);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  double midpoint() const { return 0.5 * (lo_ + hi_); }
  bool contains(double a, double tolerance = 0.0) const {
    return a >= lo_ - tolerance && a <= hi_ + tolerance;
  }
  // max(lo - a, a - hi, 0)
  double distance(double a) const;

 private:
  double lo_;
  double hi_;
};

// Utility of the debater arguing second with answer b against answer a when
// both argue optimally: |a - b| - dist(b, interval).
double second_mover_value(double a, double b, const AnswerInterval& interval);

// Expected utility of player 1 under a fair coin for argument order:
// dist(a2)/2 - dist(a1)/2. Antisymmetric in (a1, a2).
double expected_payoff(double a1, double a2, const AnswerInterval& interval);

// The set of optimal pure answers; it is the interval itself.
struct EquilibriumAnswers {
  double lo;
  double hi;
  bool unique() const { return lo == hi; }
};
EquilibriumAnswers equilibrium_answers(const AnswerInterval& interval);

struct NashReport {
  double grid_step = 0.0;
  std::vector<double> grid;
  // Grid answers attaining the game's maxmin value, found by enumerating
  // the full payoff matrix.
  std::vector<double> equilibrium_answers;
  // Answers where the brute-force result disagrees with the interval: an
  // equilibrium answer farther than one step from it, or an in-interval
  // grid answer the enumeration rejected.
  std::vector<double> mismatches;
  double game_value = 0.0;

  bool ok() const { return mismatches.empty(); }
};

// Brute-force check of the closed form on the grid {0, step, ..., 1}.
// Requires 0 < grid_step <= 1 (std::invalid_argument otherwise).
NashReport verify_nash(const AnswerInterval& interval, double grid_step);

}  // namespace debate
