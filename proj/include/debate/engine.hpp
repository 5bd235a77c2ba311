#pragma once

// Full debate playouts and the truth-promotion metrics built on them.

#include <cstdint>
#include <string>
#include <vector>

#include "debate/answering.hpp"
#include "debate/argumentation.hpp"
#include "debate/judge.hpp"
#include "debate/question.hpp"
#include "debate/world.hpp"

namespace debate {

// A feature debate F(f, N) over a prior, before a world is drawn.
struct DebateSetup {
  Prior prior;
  Question question;
  int rounds = 1;
  bool pass_allowed = true;
  // Legal arguments beyond the question's relevant features.
  std::vector<FeatureIndex> extra_indices;

  ArgGameSpec spec_for(const World& world) const;
};

struct AnswerPolicy {
  enum class Kind { optimal_lo, optimal_hi, midpoint, scripted };

  Kind kind = Kind::optimal_lo;
  double a1 = 0.0;  // scripted only
  double a2 = 0.0;

  static AnswerPolicy optimal_lo() { return {Kind::optimal_lo}; }
  static AnswerPolicy optimal_hi() { return {Kind::optimal_hi}; }
  static AnswerPolicy midpoint() { return {Kind::midpoint}; }
  static AnswerPolicy scripted(double a1, double a2) { return {Kind::scripted, a1, a2}; }
};

enum class Player { one = 1, two = 2 };

struct Transcript {
  std::string question;
  World world;
  double truth = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  Player first_mover = Player::one;
  std::vector<FeatureIndex> arguments;  // 2N, in order
  double final_belief = 0.0;
  double u1 = 0.0;
  double u2 = 0.0;
  Player winner = Player::one;  // whose answer became the outcome
  bool coin_tie_break = false;  // utilities tied and a coin decided
  double outcome = 0.0;
  double error = 0.0;
  // The judge's single experiment: re-checks one revealed feature.
  // PASS (and a value of 0) when nothing was revealed.
  FeatureIndex experiment = FeatureIndex::pass();
  double experiment_result = 0.0;
  std::uint64_t seed = 0;
};

// One full debate: draw w, pick answers, randomize the first arguer, play
// the optimal argument lines, score and pick the outcome. Identical seeds
// give identical transcripts.
Transcript play_debate(const DebateSetup& setup, const AnswerPolicy& policy, std::uint64_t seed);

// Worlds to enumerate for exact expectations, with their masses. Explicit
// priors give their atoms. Product priors give every assignment of the
// question's relevant features (last varies fastest), other features at
// their first support value.
std::vector<WeightedWorld> support_worlds(const Prior& prior, const Question& question);

// Worst deviation of any equilibrium outcome in w.
double worst_case_error(const DebateSetup& setup, const World& world);

// How each world picks one equilibrium answer when averaging over the prior.
enum class AnswerSelection { worst_in_lambda, midpoint_of_lambda };

struct WorldPromotion {
  World world;
  double probability = 0.0;  // mass of the world's class of relevant values
  double truth = 0.0;
  AnswerInterval lambda{0.0, 0.0};
  double worst_case_error = 0.0;
  double selected_error = 0.0;  // deviation of the selected answer
};

struct PromotionReport {
  std::vector<WorldPromotion> worlds;
  double expected_error = 0.0;
  double max_worst_case_error = 0.0;

  bool truth_promoting(double epsilon) const { return max_worst_case_error <= epsilon; }
  bool truth_promoting_in_expectation(double epsilon) const { return expected_error <= epsilon; }
};

// Exact enumeration over the prior's support. Product priors enumerate the
// assignments of the question's relevant features only; other features sit
// at their first support value. Worlds are solved in parallel.
PromotionReport promotion_report(const DebateSetup& setup, AnswerSelection selection);
double expected_error(const DebateSetup& setup, AnswerSelection selection);

// Realized utility of the debater who argues second, averaged over both
// argument orders. Equals |a1 - a2| when both answers lie in the answer
// interval; throws AnswersOutsideLambda otherwise.
double last_mover_advantage(const DebateSetup& setup, const World& world, double a1, double a2);
// Same, for an already-solved argument game.
double last_mover_advantage(const MinimaxResult& solved, double a1, double a2);

struct OscillationProfile {
  std::vector<FeatureIndex> line;
  BeliefTrajectory trajectory;
  double prior_mean = 0.0;
  // Sign changes of (belief - prior_mean) along the trajectory.
  int side_changes = 0;
};

// Replays the optimal line of one argument order through the judge.
OscillationProfile oscillation_profile(const DebateSetup& setup, const World& world,
                                       bool maximizer_first = true);

// Sign changes of (belief - level) along the trajectory, skipping entries
// within 1e-12 of the level.
int count_crossings(const BeliefTrajectory& trajectory, double level);

// Everything the metrics above report for one world, from a single solve.
struct WorldAnalysis {
  MinimaxResult solved;
  double truth = 0.0;
  AnswerInterval lambda{0.0, 0.0};
  double worst_case_error = 0.0;
  // last_mover_advantage with answers at the interval's endpoints.
  double last_mover_advantage = 0.0;
  OscillationProfile oscillation;  // maximizer-first line
};

WorldAnalysis analyze_world(const DebateSetup& setup, const World& world);

}  // namespace debate
