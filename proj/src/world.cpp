#include "debate/world.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "debate/errors.hpp"
#include "debate/random.hpp"

namespace debate {

bool same_value(double a, double b) { return std::abs(a - b) <= kValueTolerance; }

std::string FeatureIndex::to_string() const {
  return is_pass() ? std::string("PASS") : std::to_string(index_);
}

World::World(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("world must have at least one feature");
  for (double v : values_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("feature value outside [0,1]: " + std::to_string(v));
    }
  }
}

double World::at(FeatureIndex index) const {
  if (index.is_pass() || index.value() >= values_.size()) {
    throw IndexOutOfRange("feature index " + index.to_string() + " out of range for dimension " +
                          std::to_string(values_.size()));
  }
  return values_[index.value()];
}

std::string World::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out << ',';
    out << values_[i];
  }
  out << ')';
  return out.str();
}

RevealSet reveals_in(const World& world, std::span<const FeatureIndex> arguments) {
  RevealSet reveals;
  reveals.reserve(arguments.size());
  for (auto index : arguments) {
    reveals.push_back({index, index.is_pass() ? 0.0 : world.at(index)});
  }
  return reveals;
}

namespace {

void check_mass(double total) {
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw std::invalid_argument("probabilities sum to " + std::to_string(total) + ", not 1");
  }
}

// Position of `value` among a feature's support values, or npos.
std::size_t find_value(const FeatureDistribution& feature, double value) {
  for (std::size_t k = 0; k < feature.values.size(); ++k) {
    if (same_value(feature.values[k], value)) return k;
  }
  return static_cast<std::size_t>(-1);
}

bool matches(const World& world, const RevealSet& reveals) {
  for (const auto& r : reveals) {
    if (r.index.is_pass()) continue;
    if (!same_value(world[r.index.value()], r.value)) return false;
  }
  return true;
}

void check_indices(const RevealSet& reveals, std::size_t dimension) {
  for (const auto& r : reveals) {
    if (!r.index.is_pass() && r.index.value() >= dimension) {
      throw IndexOutOfRange("revealed index " + r.index.to_string() +
                            " out of range for dimension " + std::to_string(dimension));
    }
  }
}

}  // namespace

Prior Prior::explicit_support(std::vector<WeightedWorld> atoms) {
  if (atoms.empty()) throw std::invalid_argument("explicit prior needs at least one atom");
  const std::size_t dim = atoms.front().world.dimension();
  double total = 0.0;
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    if (atoms[a].world.dimension() != dim) {
      throw std::invalid_argument("explicit prior atoms differ in dimension");
    }
    if (!(atoms[a].probability > 0.0)) {
      throw std::invalid_argument("explicit prior atoms need positive probability");
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (atoms[b].world == atoms[a].world) {
        throw std::invalid_argument("duplicate world in explicit prior: " +
                                    atoms[a].world.to_string());
      }
    }
    total += atoms[a].probability;
  }
  check_mass(total);
  Prior prior;
  prior.kind_ = Kind::explicit_support;
  prior.dimension_ = dim;
  prior.atoms_ = std::move(atoms);
  return prior;
}

Prior Prior::product(std::vector<FeatureDistribution> features) {
  if (features.empty()) throw std::invalid_argument("product prior needs at least one feature");
  for (std::size_t i = 0; i < features.size(); ++i) {
    const auto& f = features[i];
    if (f.values.empty() || f.values.size() != f.probs.size()) {
      throw std::invalid_argument("feature " + std::to_string(i) +
                                  ": values and probs must be non-empty and of equal length");
    }
    double total = 0.0;
    for (std::size_t k = 0; k < f.values.size(); ++k) {
      if (!(f.values[k] >= 0.0 && f.values[k] <= 1.0)) {
        throw std::invalid_argument("feature " + std::to_string(i) + ": value outside [0,1]");
      }
      if (!(f.probs[k] > 0.0)) {
        throw std::invalid_argument("feature " + std::to_string(i) +
                                    ": probabilities must be positive");
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (same_value(f.values[j], f.values[k])) {
          throw std::invalid_argument("feature " + std::to_string(i) + ": duplicate value");
        }
      }
      total += f.probs[k];
    }
    check_mass(total);
  }
  Prior prior;
  prior.kind_ = Kind::product;
  prior.dimension_ = features.size();
  prior.features_ = std::move(features);
  return prior;
}

Prior Prior::bernoulli(std::size_t dimension, double p_one) {
  if (!(p_one > 0.0 && p_one < 1.0)) {
    throw std::invalid_argument("Bernoulli parameter must lie strictly inside (0,1)");
  }
  return product(std::vector<FeatureDistribution>(dimension, {{0.0, 1.0}, {1.0 - p_one, p_one}}));
}

double Prior::probability(const World& world) const {
  if (world.dimension() != dimension_) return 0.0;
  if (kind_ == Kind::explicit_support) {
    for (const auto& atom : atoms_) {
      if (atom.world == world) return atom.probability;
    }
    for (const auto& atom : atoms_) {
      bool equal = true;
      for (std::size_t i = 0; i < dimension_ && equal; ++i) {
        equal = same_value(atom.world[i], world[i]);
      }
      if (equal) return atom.probability;
    }
    return 0.0;
  }
  double p = 1.0;
  for (std::size_t i = 0; i < dimension_; ++i) {
    const auto k = find_value(features_[i], world[i]);
    if (k == static_cast<std::size_t>(-1)) return 0.0;
    p *= features_[i].probs[k];
  }
  return p;
}

std::vector<WeightedWorld> Prior::enumerate(std::size_t limit) const {
  if (kind_ == Kind::explicit_support) return atoms_;
  std::size_t count = 1;
  for (const auto& f : features_) {
    if (count > limit / f.values.size()) {
      throw std::length_error("product prior support exceeds enumeration limit");
    }
    count *= f.values.size();
  }
  std::vector<WeightedWorld> out;
  out.reserve(count);
  std::vector<std::size_t> digit(dimension_, 0);
  std::vector<double> values(dimension_);
  for (std::size_t n = 0; n < count; ++n) {
    double p = 1.0;
    for (std::size_t i = 0; i < dimension_; ++i) {
      values[i] = features_[i].values[digit[i]];
      p *= features_[i].probs[digit[i]];
    }
    out.push_back({World(values), p});
    // Last feature varies fastest.
    for (std::size_t i = dimension_; i-- > 0;) {
      if (++digit[i] < features_[i].values.size()) break;
      digit[i] = 0;
    }
  }
  return out;
}

World sample_world(const Prior& prior, std::uint64_t seed) {
  Rng rng(seed);
  if (prior.kind() == Prior::Kind::explicit_support) {
    const auto& atoms = prior.atoms();
    const double u = unit_double(rng);
    double cumulative = 0.0;
    for (const auto& atom : atoms) {
      cumulative += atom.probability;
      if (u < cumulative) return atom.world;
    }
    return atoms.back().world;
  }
  std::vector<double> values;
  values.reserve(prior.dimension());
  for (const auto& f : prior.features()) {
    const double u = unit_double(rng);
    double cumulative = 0.0;
    std::size_t k = 0;
    for (; k + 1 < f.values.size(); ++k) {
      cumulative += f.probs[k];
      if (u < cumulative) break;
    }
    values.push_back(f.values[k]);
  }
  return World(std::move(values));
}

Prior condition(const Prior& prior, const RevealSet& reveals) {
  check_indices(reveals, prior.dimension());
  if (prior.kind() == Prior::Kind::explicit_support) {
    std::vector<WeightedWorld> kept;
    double mass = 0.0;
    for (const auto& atom : prior.atoms()) {
      if (matches(atom.world, reveals)) {
        kept.push_back(atom);
        mass += atom.probability;
      }
    }
    if (kept.empty()) throw ZeroProbabilityEvent("no supported world matches the reveals");
    for (auto& atom : kept) atom.probability /= mass;
    return Prior::explicit_support(std::move(kept));
  }
  auto features = prior.features();
  for (const auto& r : reveals) {
    if (r.index.is_pass()) continue;
    auto& f = features[r.index.value()];
    const auto k = find_value(f, r.value);
    if (k == static_cast<std::size_t>(-1)) {
      throw ZeroProbabilityEvent("feature " + r.index.to_string() + " never takes value " +
                                 std::to_string(r.value));
    }
    f = FeatureDistribution{{f.values[k]}, {1.0}};
  }
  return Prior::product(std::move(features));
}

double run_experiment(const World& world, FeatureIndex index) { return world.at(index); }

}  // namespace debate
