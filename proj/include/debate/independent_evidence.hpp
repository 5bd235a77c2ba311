#pragma once

// Debates whose arguments are conditionally independent evidence about a
// hidden binary X. Beliefs are tracked in log-odds, where each revealed
// feature j adds its weight
//
//   ev_j(w) = log P(W_j = w_j | X = 1) / P(W_j = w_j | X = 0)
//
// to the prior log-odds p0. Optimal debaters draw the strongest remaining
// evidence from their own pile, so both argument orders end at the same
// belief: p0 + Ev_up_N(w) - Ev_down_N(w).

#include <cstddef>
#include <vector>

#include "debate/question.hpp"
#include "debate/world.hpp"

namespace debate::evidence {

struct EvidenceFeature {
  std::vector<double> values;
  std::vector<double> p_given_x1;
  std::vector<double> p_given_x0;
};

class EvidenceModel {
 public:
  // p_x1 = P(X = 1) in (0,1). Each class-conditional table must be strictly
  // positive and sum to 1, so every weight is finite. Throws
  // std::invalid_argument otherwise.
  EvidenceModel(double p_x1, std::vector<EvidenceFeature> features);

  double p_x1() const { return p_x1_; }
  double prior_log_odds() const { return prior_log_odds_; }
  std::size_t dimension() const { return features_.size(); }
  const std::vector<EvidenceFeature>& features() const { return features_; }

  // ev_j for the given feature value. Throws UnsupportedValue if the value
  // is not in feature j's table.
  double weight(std::size_t j, double value) const;
  // (ev_0(w), ..., ev_{D-1}(w)).
  std::vector<double> weights(const World& world) const;

 private:
  double p_x1_;
  double prior_log_odds_;
  std::vector<EvidenceFeature> features_;
};

double logistic(double log_odds);
double logit(double p);

struct PileDecomposition {
  std::vector<std::size_t> up;          // ev > 0
  std::vector<std::size_t> down;        // ev < 0
  std::vector<std::size_t> irrelevant;  // ev == 0
};

PileDecomposition piles(const EvidenceModel& model, const World& world);

// p0 + sum of the weights of the non-PASS reveals.
double log_odds_belief(const EvidenceModel& model, const RevealSet& reveals);

enum class Direction { up, down };

// Ev_up_n: sum of the n largest positive weights; Ev_down_n: the negated sum
// of the n most negative ones. Missing arguments count as zero.
double evidence_strength_budget(const EvidenceModel& model, const World& world, int n,
                                Direction direction);

// Probability form of p0 + Ev_up_N - Ev_down_N: the unique equilibrium
// answer.
double optimal_answer(const EvidenceModel& model, const World& world, int rounds);

struct Residual {
  double up = 0.0;    // evidence left in the up pile after N arguments
  double down = 0.0;  // same for the down pile, as a positive number
  double gap = 0.0;   // up - down: true log-odds minus final log-odds
};

Residual residual_error(const EvidenceModel& model, const World& world, int rounds);

// The up-side's (or down-side's) arguments in strongest-first order: its own
// pile by decreasing |ev| (ties to the smaller index), then zero-weight
// features, then PASS.
std::vector<FeatureIndex> strongest_first_line(const EvidenceModel& model, const World& world,
                                               int rounds, Direction direction);

// |ev| of a side's n-th argument (1-based) in its strongest-first line.
double argument_strength(const EvidenceModel& model, const World& world, int rounds,
                         Direction direction, int n);

enum class Winner { player_one, player_two, tie };

struct StopDecision {
  bool stop = false;
  Winner winner = Winner::tie;  // meaningful only when stop
};

// Answer-phase winner after the full N-round playout: the player whose
// answer is closer to the final belief.
Winner full_debate_winner(const EvidenceModel& model, const World& world, int rounds, double a1,
                          double a2);

// Decides after `round` arguments per side whether the outcome is settled:
// the currently-losing side can add at most (N - n) * s_{p,n} more log-odds,
// where s_{p,n} is the strength of its n-th argument. Stops once that cannot
// carry the belief past the answers' midpoint. Equal answers stop at once
// with a tie.
StopDecision early_stop_check(const EvidenceModel& model, const World& world, int rounds, int round,
                              double a1, double a2);

// max_p s_{p,N} * (K - 2N): bound on |true log-odds - final log-odds| when
// the model depends on at most K features. Throws BoundInapplicable when
// 2N > K or when some side runs out of model features and has to PASS
// (the bound counts 2N revealed model features).
double k_feature_bound(const EvidenceModel& model, const World& world, int rounds, std::size_t k);

// The feature debate this model induces: the marginal prior over W and the
// question f(w) = P(X = 1 | W = w).
Prior induced_prior(const EvidenceModel& model);
Question induced_question(const EvidenceModel& model);
// P(X = 1 | W = w) computed directly by Bayes' rule.
double true_answer(const EvidenceModel& model, const World& world);

}  // namespace debate::evidence
