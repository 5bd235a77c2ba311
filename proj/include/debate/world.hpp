#pragma once

// Worlds, priors over worlds, and the one-feature experiments of a feature
// debate. Feature indices are 0-based throughout the library.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace debate {

// Two feature values are the same if they agree to this tolerance.
inline constexpr double kValueTolerance = 1e-12;
// Tolerance on probability masses summing to one.
inline constexpr double kMassTolerance = 1e-12;

bool same_value(double a, double b);

// Index of a world coordinate, or the PASS sentinel: an always-legal argument
// that reveals nothing (stands in for "some irrelevant feature").
class FeatureIndex {
 public:
  constexpr FeatureIndex() = default;
  constexpr explicit FeatureIndex(std::size_t index) : index_(index) {}

  static constexpr FeatureIndex pass() { return FeatureIndex(kPass); }

  constexpr bool is_pass() const { return index_ == kPass; }
  constexpr std::size_t value() const { return index_; }

  // PASS orders after every real index.
  constexpr auto operator<=>(const FeatureIndex&) const = default;

  std::string to_string() const;

 private:
  static constexpr std::size_t kPass = std::numeric_limits<std::size_t>::max();
  std::size_t index_ = kPass;
};

class World {
 public:
  World() = default;
  // Throws std::invalid_argument if empty or any value lies outside [0,1].
  explicit World(std::vector<double> values);

  std::size_t dimension() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  // Throws IndexOutOfRange (also for PASS).
  double at(FeatureIndex index) const;
  std::span<const double> values() const { return values_; }

  std::string to_string() const;

  friend bool operator==(const World&, const World&) = default;

 private:
  std::vector<double> values_;
};

struct Reveal {
  FeatureIndex index;
  double value = 0.0;
};

// Ordered truthful claims "W_i = w_i". PASS entries carry no information.
using RevealSet = std::vector<Reveal>;

// The reveal set produced by arguing `arguments` truthfully in `world`.
RevealSet reveals_in(const World& world, std::span<const FeatureIndex> arguments);

// Categorical distribution of a single feature.
struct FeatureDistribution {
  std::vector<double> values;
  std::vector<double> probs;
};

struct WeightedWorld {
  World world;
  double probability = 0.0;
};

// Discrete distribution over worlds, either as an explicit list of atoms or
// as a product of independent per-feature distributions.
class Prior {
 public:
  enum class Kind { explicit_support, product };

  // Atoms must have one dimension, positive mass, no duplicates, and total
  // mass 1 within kMassTolerance. Throws std::invalid_argument otherwise.
  static Prior explicit_support(std::vector<WeightedWorld> atoms);
  static Prior product(std::vector<FeatureDistribution> features);
  // Independent Bernoulli features with P(W_i = 1) = p_one.
  static Prior bernoulli(std::size_t dimension, double p_one);
  static Prior uniform_boolean(std::size_t dimension) {
    return bernoulli(dimension, 0.5);
  }

  Kind kind() const { return kind_; }
  std::size_t dimension() const { return dimension_; }

  // Explicit atoms; empty for product priors.
  const std::vector<WeightedWorld>& atoms() const { return atoms_; }
  // Per-feature distributions; empty for explicit priors.
  const std::vector<FeatureDistribution>& features() const { return features_; }

  double probability(const World& world) const;
  bool supports(const World& world) const { return probability(world) > 0.0; }

  // Every supported world with its mass. For product priors this is the full
  // cartesian product; throws std::length_error above `limit` atoms.
  std::vector<WeightedWorld> enumerate(std::size_t limit = 1u << 22) const;

  // Mean of g over the prior.
  template <typename Fn>
  double expectation(Fn&& g) const {
    double total = 0.0;
    for (const auto& atom : enumerate()) total += atom.probability * g(atom.world);
    return total;
  }

 private:
  Prior() = default;

  Kind kind_ = Kind::explicit_support;
  std::size_t dimension_ = 0;
  std::vector<WeightedWorld> atoms_;
  std::vector<FeatureDistribution> features_;
};

// Draws a world from the prior. Deterministic for a fixed seed.
World sample_world(const Prior& prior, std::uint64_t seed);

// Exact conditional distribution given the reveals. PASS entries are
// ignored. Throws ZeroProbabilityEvent if no supported world matches, and
// IndexOutOfRange for indices beyond the prior's dimension.
Prior condition(const Prior& prior, const RevealSet& reveals);

// The judge's experiment: returns w_index. Throws IndexOutOfRange.
double run_experiment(const World& world, FeatureIndex index);

}  // namespace debate
