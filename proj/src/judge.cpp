#include "debate/judge.hpp"

#include <stdexcept>

#include "debate/errors.hpp"

namespace debate {

namespace {

void check_reveals(const RevealSet& reveals, std::size_t dimension) {
  for (std::size_t a = 0; a < reveals.size(); ++a) {
    const auto index = reveals[a].index;
    if (index.is_pass()) continue;
    if (index.value() >= dimension) {
      throw IndexOutOfRange("revealed index " + index.to_string() + " out of range for dimension " +
                            std::to_string(dimension));
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (reveals[b].index == index) {
        throw std::invalid_argument("feature " + index.to_string() + " revealed twice");
      }
    }
  }
}

double explicit_mean(const Prior& prior, const Question& question, const RevealSet& reveals) {
  double mass = 0.0;
  double weighted = 0.0;
  for (const auto& atom : prior.atoms()) {
    bool match = true;
    for (const auto& r : reveals) {
      if (!r.index.is_pass() && !same_value(atom.world[r.index.value()], r.value)) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    mass += atom.probability;
    weighted += atom.probability * question(atom.world);
  }
  if (mass <= 0.0) throw ZeroProbabilityEvent("no supported world matches the reveals");
  return weighted / mass;
}

double product_mean(const Prior& prior, const Question& question, const RevealSet& reveals) {
  const auto& features = prior.features();
  const std::size_t dim = prior.dimension();

  // Revealed features are pinned; everything else starts at its first value.
  std::vector<double> values(dim);
  std::vector<bool> pinned(dim, false);
  for (std::size_t i = 0; i < dim; ++i) values[i] = features[i].values.front();
  for (const auto& r : reveals) {
    if (r.index.is_pass()) continue;
    const auto i = r.index.value();
    bool supported = false;
    for (double v : features[i].values) supported = supported || same_value(v, r.value);
    if (!supported) {
      throw ZeroProbabilityEvent("feature " + r.index.to_string() + " never takes value " +
                                 std::to_string(r.value));
    }
    values[i] = r.value;
    pinned[i] = true;
  }

  std::vector<std::size_t> free;
  for (auto i : question.relevant_features()) {
    if (i >= dim) {
      throw IndexOutOfRange("question " + question.label() + " reads feature " +
                            std::to_string(i) + " beyond prior dimension " + std::to_string(dim));
    }
    if (!pinned[i]) free.push_back(i);
  }

  // Mixed-radix walk over the unrevealed relevant features.
  std::vector<std::size_t> digit(free.size(), 0);
  double weighted = 0.0;
  double mass = 0.0;
  while (true) {
    double p = 1.0;
    for (std::size_t j = 0; j < free.size(); ++j) {
      const auto& f = features[free[j]];
      values[free[j]] = f.values[digit[j]];
      p *= f.probs[digit[j]];
    }
    weighted += p * question(World(values));
    mass += p;
    std::size_t j = 0;
    for (; j < free.size(); ++j) {
      if (++digit[j] < features[free[j]].values.size()) break;
      digit[j] = 0;
    }
    if (j == free.size()) break;
  }
  return weighted / mass;
}

}  // namespace

double posterior_mean(const Prior& prior, const Question& question, const RevealSet& reveals) {
  check_reveals(reveals, prior.dimension());
  if (prior.kind() == Prior::Kind::explicit_support) return explicit_mean(prior, question, reveals);
  return product_mean(prior, question, reveals);
}

double biased_posterior_mean(const Prior& biased_prior, const Question& question,
                             const RevealSet& reveals) {
  return posterior_mean(biased_prior, question, reveals);
}

BeliefTrajectory belief_trajectory(const Prior& prior, const Question& question,
                                   const RevealSet& reveals) {
  BeliefTrajectory trajectory;
  trajectory.reserve(reveals.size() + 1);
  RevealSet prefix;
  trajectory.push_back({prefix, posterior_mean(prior, question, prefix)});
  for (const auto& r : reveals) {
    prefix.push_back(r);
    trajectory.push_back({prefix, posterior_mean(prior, question, prefix)});
  }
  return trajectory;
}

}  // namespace debate
