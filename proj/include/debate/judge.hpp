#pragma once

// The Bayesian judge. Its belief after a debate is the posterior mean of f
// given the revealed features, computed as if the evidence had been
// generated neutrally (no correction for strategic selection).

#include <vector>

#include "debate/question.hpp"
#include "debate/world.hpp"

namespace debate {

// E_prior[f | W_i = w_i for every non-PASS reveal].
//
// For explicit priors the sum runs over the atoms; for product priors only
// the unrevealed relevant features are marginalized, so the cost is
// |values|^(#unrevealed relevant features).
//
// Throws ZeroProbabilityEvent if the reveals have no mass, IndexOutOfRange
// for indices beyond the prior's dimension, and std::invalid_argument if a
// feature is revealed twice.
double posterior_mean(const Prior& prior, const Question& question, const RevealSet& reveals);

// Belief of a judge holding the biased prior `biased_prior`. The reveals
// still come from the true world, so the event may have zero mass under the
// biased prior (ZeroProbabilityEvent).
double biased_posterior_mean(const Prior& biased_prior, const Question& question,
                             const RevealSet& reveals);

struct BeliefPoint {
  RevealSet reveals;  // prefix of the argument sequence
  double belief = 0.0;
};

// Entry k is the posterior mean after the first k reveals; entry 0 is the
// prior mean.
using BeliefTrajectory = std::vector<BeliefPoint>;

BeliefTrajectory belief_trajectory(const Prior& prior, const Question& question,
                                   const RevealSet& reveals);

}  // namespace debate
