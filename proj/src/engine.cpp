#include "debate/engine.hpp"

#include <algorithm>
#include <cmath>

#include "debate/detail/parallel.hpp"
#include "debate/errors.hpp"
#include "debate/random.hpp"

namespace debate {

namespace {

constexpr double kInsideTolerance = 1e-9;
constexpr double kTieTolerance = 1e-12;

double answer_for(const AnswerPolicy& policy, const AnswerInterval& lambda, int player) {
  switch (policy.kind) {
    case AnswerPolicy::Kind::optimal_lo: return lambda.lo();
    case AnswerPolicy::Kind::optimal_hi: return lambda.hi();
    case AnswerPolicy::Kind::midpoint: return lambda.midpoint();
    case AnswerPolicy::Kind::scripted: return player == 1 ? policy.a1 : policy.a2;
  }
  return 0.0;
}

// Final belief when the debater answering `first_answer` argues first and
// the higher answer pushes the belief up.
double final_belief(const MinimaxResult& solved, double first_answer, double second_answer) {
  const bool maximizer_first = first_answer >= second_answer;
  return maximizer_first ? solved.value_up_down : solved.value_down_up;
}

}  // namespace

std::vector<WeightedWorld> support_worlds(const Prior& prior, const Question& question) {
  if (prior.kind() == Prior::Kind::explicit_support) return prior.atoms();

  const auto& features = prior.features();
  std::vector<double> values(prior.dimension());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = features[i].values.front();
  const auto& free = question.relevant_features();
  for (auto i : free) {
    if (i >= prior.dimension()) {
      throw IndexOutOfRange("question reads feature beyond the prior's dimension");
    }
  }

  std::vector<WeightedWorld> out;
  std::vector<std::size_t> digit(free.size(), 0);
  while (true) {
    double p = 1.0;
    for (std::size_t j = 0; j < free.size(); ++j) {
      values[free[j]] = features[free[j]].values[digit[j]];
      p *= features[free[j]].probs[digit[j]];
    }
    out.push_back({World(values), p});
    // Last relevant feature varies fastest.
    std::size_t j = free.size();
    for (; j-- > 0;) {
      if (++digit[j] < features[free[j]].values.size()) break;
      digit[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

ArgGameSpec DebateSetup::spec_for(const World& world) const {
  return make_spec(prior, question, world, rounds, pass_allowed, extra_indices);
}

Transcript play_debate(const DebateSetup& setup, const AnswerPolicy& policy, std::uint64_t seed) {
  Rng rng(seed);
  Transcript t;
  t.seed = seed;
  t.question = setup.question.label();
  t.world = sample_world(setup.prior, rng());
  t.truth = evaluate(setup.question, t.world);

  const auto solved = solve(setup.spec_for(t.world));
  const AnswerInterval lambda(solved);
  t.a1 = answer_for(policy, lambda, 1);
  t.a2 = answer_for(policy, lambda, 2);
  if (!(t.a1 >= 0.0 && t.a1 <= 1.0 && t.a2 >= 0.0 && t.a2 <= 1.0)) {
    throw std::invalid_argument("answers must lie in [0,1]");
  }

  t.first_mover = coin_flip(rng) ? Player::one : Player::two;
  // Player 1 pushes the belief up iff a1 >= a2.
  const bool one_maximizes = t.a1 >= t.a2;
  const bool maximizer_first = one_maximizes == (t.first_mover == Player::one);
  t.arguments = maximizer_first ? solved.line_up_down : solved.line_down_up;
  t.final_belief = maximizer_first ? solved.value_up_down : solved.value_down_up;

  t.u1 = std::abs(t.final_belief - t.a2) - std::abs(t.final_belief - t.a1);
  t.u2 = -t.u1;
  if (std::abs(t.u1) <= kTieTolerance) {
    t.coin_tie_break = true;
    t.winner = coin_flip(rng) ? Player::one : Player::two;
  } else {
    t.winner = t.u1 > 0.0 ? Player::one : Player::two;
  }
  t.outcome = t.winner == Player::one ? t.a1 : t.a2;
  t.error = deviation(setup.question, t.outcome, t.world);

  std::vector<FeatureIndex> revealed;
  for (auto a : t.arguments) {
    if (!a.is_pass()) revealed.push_back(a);
  }
  if (!revealed.empty()) {
    t.experiment = revealed[uniform_index(rng, revealed.size())];
    t.experiment_result = run_experiment(t.world, t.experiment);
  }
  return t;
}

double worst_case_error(const DebateSetup& setup, const World& world) {
  return truth_promotion_bound(setup.spec_for(world));
}

PromotionReport promotion_report(const DebateSetup& setup, AnswerSelection selection) {
  const auto classes = support_worlds(setup.prior, setup.question);
  PromotionReport report;
  report.worlds.resize(classes.size());
  detail::parallel_for(classes.size(), [&](std::size_t k) {
    const auto& world = classes[k].world;
    const auto solved = solve(setup.spec_for(world));
    WorldPromotion entry{world, classes[k].probability, evaluate(setup.question, world),
                         AnswerInterval(solved), 0.0, 0.0};
    entry.worst_case_error = truth_promotion_bound(solved, entry.truth);
    entry.selected_error = selection == AnswerSelection::worst_in_lambda
                               ? entry.worst_case_error
                               : std::abs(entry.lambda.midpoint() - entry.truth);
    report.worlds[k] = std::move(entry);
  });
  for (const auto& entry : report.worlds) {
    report.expected_error += entry.probability * entry.selected_error;
    report.max_worst_case_error = std::max(report.max_worst_case_error, entry.worst_case_error);
  }
  return report;
}

double expected_error(const DebateSetup& setup, AnswerSelection selection) {
  return promotion_report(setup, selection).expected_error;
}

namespace {

OscillationProfile replay(const DebateSetup& setup, const World& world, const MinimaxResult& solved,
                          bool maximizer_first) {
  OscillationProfile profile;
  profile.line = maximizer_first ? solved.line_up_down : solved.line_down_up;
  profile.trajectory = belief_trajectory(setup.prior, setup.question, reveals_in(world, profile.line));
  profile.prior_mean = profile.trajectory.front().belief;
  profile.side_changes = count_crossings(profile.trajectory, profile.prior_mean);
  return profile;
}

}  // namespace

double last_mover_advantage(const MinimaxResult& solved, double a1, double a2) {
  const AnswerInterval lambda(solved);
  if (!lambda.contains(a1, kInsideTolerance) || !lambda.contains(a2, kInsideTolerance)) {
    throw AnswersOutsideLambda("answers must lie in [" + std::to_string(lambda.lo()) + ", " +
                               std::to_string(lambda.hi()) + "]");
  }
  // Player 2 second, then player 1 second.
  const double b2 = final_belief(solved, a1, a2);
  const double second_is_two = std::abs(b2 - a1) - std::abs(b2 - a2);
  const double b1 = final_belief(solved, a2, a1);
  const double second_is_one = std::abs(b1 - a2) - std::abs(b1 - a1);
  return 0.5 * (second_is_two + second_is_one);
}

double last_mover_advantage(const DebateSetup& setup, const World& world, double a1, double a2) {
  return last_mover_advantage(solve(setup.spec_for(world)), a1, a2);
}

int count_crossings(const BeliefTrajectory& trajectory, double level) {
  int changes = 0;
  int previous = 0;
  for (const auto& point : trajectory) {
    const double diff = point.belief - level;
    if (std::abs(diff) <= kTieTolerance) continue;
    const int sign = diff > 0.0 ? 1 : -1;
    if (previous != 0 && sign != previous) ++changes;
    previous = sign;
  }
  return changes;
}

OscillationProfile oscillation_profile(const DebateSetup& setup, const World& world,
                                       bool maximizer_first) {
  return replay(setup, world, solve(setup.spec_for(world)), maximizer_first);
}

WorldAnalysis analyze_world(const DebateSetup& setup, const World& world) {
  WorldAnalysis out;
  out.solved = solve(setup.spec_for(world));
  out.truth = evaluate(setup.question, world);
  out.lambda = AnswerInterval(out.solved);
  out.worst_case_error = truth_promotion_bound(out.solved, out.truth);
  out.last_mover_advantage = last_mover_advantage(out.solved, out.lambda.lo(), out.lambda.hi());
  out.oscillation = replay(setup, world, out.solved, true);
  return out;
}

}  // namespace debate
