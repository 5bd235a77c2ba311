#include "debate/independent_evidence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "debate/errors.hpp"

namespace debate::evidence {

namespace {

constexpr double kMass = 1e-12;

void check_table(const std::vector<double>& probs, std::size_t j, const char* which) {
  double total = 0.0;
  for (double p : probs) {
    if (!(p > 0.0)) {
      throw std::invalid_argument("feature " + std::to_string(j) + ": " + which +
                                  " entries must be positive");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kMass) {
    throw std::invalid_argument("feature " + std::to_string(j) + ": " + which + " sums to " +
                                std::to_string(total));
  }
}

std::size_t value_slot(const EvidenceFeature& f, double value) {
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    if (same_value(f.values[k], value)) return k;
  }
  return static_cast<std::size_t>(-1);
}

// Indices of `pile` ordered by decreasing |weight|, ties to the smaller index.
void sort_by_strength(std::vector<std::size_t>& pile, const std::vector<double>& weights) {
  std::stable_sort(pile.begin(), pile.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(weights[a]) > std::abs(weights[b]);
  });
}

// Sum of the strongest n entries of a pile, as a positive number.
double top_sum(std::vector<std::size_t> pile, const std::vector<double>& weights, int n) {
  sort_by_strength(pile, weights);
  double total = 0.0;
  for (int k = 0; k < n && k < static_cast<int>(pile.size()); ++k) total += std::abs(weights[pile[k]]);
  return total;
}

double pile_total(const std::vector<std::size_t>& pile, const std::vector<double>& weights) {
  double total = 0.0;
  for (auto j : pile) total += std::abs(weights[j]);
  return total;
}

void check_rounds(int rounds) {
  if (rounds < 0) throw std::invalid_argument("round count must be non-negative");
}

}  // namespace

EvidenceModel::EvidenceModel(double p_x1, std::vector<EvidenceFeature> features)
    : p_x1_(p_x1), features_(std::move(features)) {
  if (!(p_x1 > 0.0 && p_x1 < 1.0)) throw std::invalid_argument("P(X=1) must lie in (0,1)");
  if (features_.empty()) throw std::invalid_argument("evidence model needs at least one feature");
  for (std::size_t j = 0; j < features_.size(); ++j) {
    const auto& f = features_[j];
    if (f.values.empty() || f.p_given_x1.size() != f.values.size() ||
        f.p_given_x0.size() != f.values.size()) {
      throw std::invalid_argument("feature " + std::to_string(j) + ": table sizes differ");
    }
    for (double v : f.values) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument("feature " + std::to_string(j) + ": value outside [0,1]");
      }
    }
    check_table(f.p_given_x1, j, "p_given_x1");
    check_table(f.p_given_x0, j, "p_given_x0");
  }
  prior_log_odds_ = std::log(p_x1 / (1.0 - p_x1));
}

double EvidenceModel::weight(std::size_t j, double value) const {
  if (j >= features_.size()) {
    throw IndexOutOfRange("feature " + std::to_string(j) + " beyond model dimension");
  }
  const auto& f = features_[j];
  const auto k = value_slot(f, value);
  if (k == static_cast<std::size_t>(-1)) {
    throw UnsupportedValue("feature " + std::to_string(j) + " has no entry for value " +
                           std::to_string(value));
  }
  return std::log(f.p_given_x1[k] / f.p_given_x0[k]);
}

std::vector<double> EvidenceModel::weights(const World& world) const {
  if (world.dimension() != features_.size()) {
    throw std::invalid_argument("world dimension does not match the evidence model");
  }
  std::vector<double> out(features_.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = weight(j, world[j]);
  return out;
}

double logistic(double log_odds) { return 1.0 / (1.0 + std::exp(-log_odds)); }

double logit(double p) { return std::log(p / (1.0 - p)); }

PileDecomposition piles(const EvidenceModel& model, const World& world) {
  const auto w = model.weights(world);
  PileDecomposition out;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] > 0.0) {
      out.up.push_back(j);
    } else if (w[j] < 0.0) {
      out.down.push_back(j);
    } else {
      out.irrelevant.push_back(j);
    }
  }
  return out;
}

double log_odds_belief(const EvidenceModel& model, const RevealSet& reveals) {
  double belief = model.prior_log_odds();
  for (const auto& r : reveals) {
    if (!r.index.is_pass()) belief += model.weight(r.index.value(), r.value);
  }
  return belief;
}

double evidence_strength_budget(const EvidenceModel& model, const World& world, int n,
                                Direction direction) {
  check_rounds(n);
  const auto w = model.weights(world);
  const auto p = piles(model, world);
  return top_sum(direction == Direction::up ? p.up : p.down, w, n);
}

double optimal_answer(const EvidenceModel& model, const World& world, int rounds) {
  return logistic(model.prior_log_odds() +
                  evidence_strength_budget(model, world, rounds, Direction::up) -
                  evidence_strength_budget(model, world, rounds, Direction::down));
}

Residual residual_error(const EvidenceModel& model, const World& world, int rounds) {
  check_rounds(rounds);
  const auto w = model.weights(world);
  const auto p = piles(model, world);
  Residual r;
  r.up = pile_total(p.up, w) - top_sum(p.up, w, rounds);
  r.down = pile_total(p.down, w) - top_sum(p.down, w, rounds);
  r.gap = r.up - r.down;
  return r;
}

std::vector<FeatureIndex> strongest_first_line(const EvidenceModel& model, const World& world,
                                               int rounds, Direction direction) {
  check_rounds(rounds);
  const auto w = model.weights(world);
  auto p = piles(model, world);
  auto& own = direction == Direction::up ? p.up : p.down;
  sort_by_strength(own, w);
  std::vector<FeatureIndex> line;
  for (auto j : own) {
    if (static_cast<int>(line.size()) == rounds) break;
    line.emplace_back(j);
  }
  for (auto j : p.irrelevant) {
    if (static_cast<int>(line.size()) == rounds) break;
    line.emplace_back(j);
  }
  while (static_cast<int>(line.size()) < rounds) line.push_back(FeatureIndex::pass());
  return line;
}

double argument_strength(const EvidenceModel& model, const World& world, int rounds,
                         Direction direction, int n) {
  if (n < 1 || n > rounds) throw std::invalid_argument("argument number out of range");
  const auto line = strongest_first_line(model, world, rounds, direction);
  const auto arg = line[n - 1];
  return arg.is_pass() ? 0.0 : std::abs(model.weight(arg.value(), world[arg.value()]));
}

Winner full_debate_winner(const EvidenceModel& model, const World& world, int rounds, double a1,
                          double a2) {
  const double belief = optimal_answer(model, world, rounds);
  const double d1 = std::abs(belief - a1);
  const double d2 = std::abs(belief - a2);
  if (d1 < d2) return Winner::player_one;
  if (d2 < d1) return Winner::player_two;
  return Winner::tie;
}

StopDecision early_stop_check(const EvidenceModel& model, const World& world, int rounds, int round,
                              double a1, double a2) {
  check_rounds(rounds);
  if (round < 0 || round > rounds) throw std::invalid_argument("round outside [0, N]");
  if (a1 == a2) return {true, Winner::tie};
  if (round == rounds) return {true, full_debate_winner(model, world, rounds, a1, a2)};
  if (round == 0) return {false, Winner::tie};

  const Winner up_player = a1 > a2 ? Winner::player_one : Winner::player_two;
  const Winner down_player = a1 > a2 ? Winner::player_two : Winner::player_one;
  const double belief = model.prior_log_odds() +
                        evidence_strength_budget(model, world, round, Direction::up) -
                        evidence_strength_budget(model, world, round, Direction::down);
  const double midpoint = logit(0.5 * (a1 + a2));
  const int left = rounds - round;

  if (belief > midpoint) {
    const double reach = left * argument_strength(model, world, rounds, Direction::down, round);
    if (belief - reach > midpoint) return {true, up_player};
  } else if (belief < midpoint) {
    const double reach = left * argument_strength(model, world, rounds, Direction::up, round);
    if (belief + reach < midpoint) return {true, down_player};
  }
  return {false, Winner::tie};
}

double k_feature_bound(const EvidenceModel& model, const World& world, int rounds, std::size_t k) {
  check_rounds(rounds);
  if (2 * static_cast<std::size_t>(rounds) > k) {
    throw BoundInapplicable("2N = " + std::to_string(2 * rounds) + " exceeds K = " +
                            std::to_string(k));
  }
  const auto p = piles(model, world);
  const auto shortfall = [&](const std::vector<std::size_t>& pile) {
    return pile.size() >= static_cast<std::size_t>(rounds) ? 0 : rounds - pile.size();
  };
  if (shortfall(p.up) + shortfall(p.down) > p.irrelevant.size()) {
    throw BoundInapplicable("a debater runs out of model features before N arguments");
  }
  if (rounds == 0) {
    // No arguments at all: every weight is still unrevealed.
    const auto w = model.weights(world);
    double strongest = 0.0;
    for (double x : w) strongest = std::max(strongest, std::abs(x));
    return strongest * static_cast<double>(k);
  }
  const double s = std::max(argument_strength(model, world, rounds, Direction::up, rounds),
                            argument_strength(model, world, rounds, Direction::down, rounds));
  return s * static_cast<double>(k - 2 * static_cast<std::size_t>(rounds));
}

double true_answer(const EvidenceModel& model, const World& world) {
  const auto w = model.weights(world);
  return logistic(std::accumulate(w.begin(), w.end(), model.prior_log_odds()));
}

Prior induced_prior(const EvidenceModel& model) {
  const auto& features = model.features();
  const std::size_t dim = features.size();
  std::vector<std::size_t> digit(dim, 0);
  std::vector<double> values(dim);
  std::vector<WeightedWorld> atoms;
  while (true) {
    double given1 = model.p_x1();
    double given0 = 1.0 - model.p_x1();
    for (std::size_t j = 0; j < dim; ++j) {
      values[j] = features[j].values[digit[j]];
      given1 *= features[j].p_given_x1[digit[j]];
      given0 *= features[j].p_given_x0[digit[j]];
    }
    atoms.push_back({World(values), given1 + given0});
    std::size_t j = dim;
    for (; j-- > 0;) {
      if (++digit[j] < features[j].values.size()) break;
      digit[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
    if (atoms.size() > (1u << 20)) throw std::length_error("induced prior too large to enumerate");
  }
  double total = 0.0;
  for (const auto& a : atoms) total += a.probability;
  for (auto& a : atoms) a.probability /= total;
  return Prior::explicit_support(std::move(atoms));
}

Question induced_question(const EvidenceModel& model) {
  const auto prior = induced_prior(model);
  std::vector<std::size_t> features(model.dimension());
  std::iota(features.begin(), features.end(), 0);
  questions::TableRows rows;
  for (const auto& atom : prior.atoms()) {
    const auto v = atom.world.values();
    rows.emplace(std::vector<double>(v.begin(), v.end()), true_answer(model, atom.world));
  }
  return questions::table(std::move(features), std::move(rows), "P(X=1|W)");
}

}  // namespace debate::evidence
