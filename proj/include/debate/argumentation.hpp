#pragma once

// Exact solution of the argumentation phase of a feature debate.
//
// After answers are fixed, the debater with the higher answer wants the
// judge's final belief high and the other wants it low. With 2N alternating
// arguments, each revealing one unused feature, the two extreme outcomes are
//
//   value_up_down = max min ... max min  belief   (maximizer argues first)
//   value_down_up = min max ... min max  belief   (minimizer argues first)
//
// and value_up_down <= value_down_up.

#include <vector>

#include "debate/question.hpp"
#include "debate/world.hpp"

namespace debate {

struct ArgGameSpec {
  Prior prior;
  Question question;
  World world;
  int rounds = 1;             // N; the debate has 2N arguments
  bool pass_allowed = true;   // PASS is always legal and may repeat
  // Features debaters may reveal. Empty means the question's relevant set.
  std::vector<FeatureIndex> legal_indices;
};

// Spec over the question's relevant features plus `extra` indices.
ArgGameSpec make_spec(Prior prior, Question question, World world, int rounds,
                      bool pass_allowed = true, std::vector<FeatureIndex> extra = {});

struct MinimaxResult {
  double value_up_down = 0.0;
  double value_down_up = 0.0;
  std::vector<FeatureIndex> line_up_down;  // 2N arguments
  std::vector<FeatureIndex> line_down_up;

  double lo() const { return value_up_down; }
  double hi() const { return value_down_up; }
};

// Exhaustive memoized search. Ties go to the smallest index, PASS last.
// When no unused legal index remains and PASS is disallowed, the debater is
// forced to PASS.
//
// Throws std::invalid_argument for rounds < 1, a world outside the prior's
// support, or more than 58 legal indices.
MinimaxResult solve(const ArgGameSpec& spec);

// max{|value_up_down - f(w)|, |value_down_up - f(w)|}: the worst deviation
// of any equilibrium outcome. Zero iff the debate is truth-promoting in w.
double truth_promotion_bound(const ArgGameSpec& spec);
double truth_promotion_bound(const MinimaxResult& result, double truth);

struct StallDepth {
  int base_rounds = 0;
  int wrapped_rounds = 0;
};

// Smallest round counts at which `base` and `wrapped` become
// truth-promoting in w (bound <= 1e-9), searching N = 1..max_rounds over
// each question's relevant features plus PASS. Throws NotPromotedWithin if
// either question never gets there.
StallDepth stall_depth(const Question& base, const Question& wrapped, const Prior& prior,
                       const World& world, int max_rounds);

}  // namespace debate
