#pragma once

// Reference implementations used as test oracles. They are deliberately
// naive: full enumeration, no memoization, no shared code with the solvers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <vector>

#include "debate/independent_evidence.hpp"
#include "debate/question.hpp"
#include "debate/world.hpp"

namespace oracle {

using debate::FeatureIndex;
using debate::Prior;
using debate::Question;
using debate::World;

struct Atom {
  std::vector<double> values;
  double p;
};

// Every supported world with its mass, built from the prior's raw tables.
inline std::vector<Atom> atoms(const Prior& prior) {
  std::vector<Atom> out;
  if (prior.kind() == Prior::Kind::explicit_support) {
    for (const auto& a : prior.atoms()) {
      out.push_back({std::vector<double>(a.world.values().begin(), a.world.values().end()),
                     a.probability});
    }
    return out;
  }
  out.push_back({{}, 1.0});
  for (const auto& f : prior.features()) {
    std::vector<Atom> next;
    for (const auto& partial : out) {
      for (std::size_t v = 0; v < f.values.size(); ++v) {
        if (f.probs[v] <= 0.0) continue;
        auto values = partial.values;
        values.push_back(f.values[v]);
        next.push_back({std::move(values), partial.p * f.probs[v]});
      }
    }
    out = std::move(next);
  }
  return out;
}

// E[f | W_i = w_i for each revealed i], by filtering the full support.
inline double posterior(const Prior& prior, const Question& q,
                        const std::vector<std::pair<std::size_t, double>>& revealed) {
  double mass = 0.0, total = 0.0;
  for (const auto& a : atoms(prior)) {
    bool ok = true;
    for (auto [i, v] : revealed) ok = ok && std::abs(a.values[i] - v) <= 1e-12;
    if (!ok) continue;
    mass += a.p;
    total += a.p * q(World(a.values));
  }
  return total / mass;
}

// Plain recursive alternating max/min over every argument sequence. The
// same index may not be revealed twice; PASS is legal when allowed or when
// nothing else is left.
inline double minimax(const Prior& prior, const Question& q, const World& w,
                      const std::vector<std::size_t>& legal, int plies, bool maximize,
                      bool pass_allowed, std::vector<std::pair<std::size_t, double>>& revealed) {
  if (plies == 0) return posterior(prior, q, revealed);
  double best = maximize ? -std::numeric_limits<double>::infinity()
                         : std::numeric_limits<double>::infinity();
  bool moved = false;
  for (auto i : legal) {
    bool used = false;
    for (auto [j, v] : revealed) used = used || j == i;
    if (used) continue;
    moved = true;
    revealed.emplace_back(i, w[i]);
    const double v = minimax(prior, q, w, legal, plies - 1, !maximize, pass_allowed, revealed);
    revealed.pop_back();
    best = maximize ? std::max(best, v) : std::min(best, v);
  }
  if (pass_allowed || !moved) {
    const double v = minimax(prior, q, w, legal, plies - 1, !maximize, pass_allowed, revealed);
    best = maximize ? std::max(best, v) : std::min(best, v);
  }
  return best;
}

struct Values {
  double up_down;
  double down_up;
};

inline Values solve(const Prior& prior, const Question& q, const World& w, int rounds,
                    const std::vector<std::size_t>& legal, bool pass_allowed = true) {
  std::vector<std::pair<std::size_t, double>> revealed;
  const double a = minimax(prior, q, w, legal, 2 * rounds, true, pass_allowed, revealed);
  const double b = minimax(prior, q, w, legal, 2 * rounds, false, pass_allowed, revealed);
  return {a, b};
}

// Test-local generators (independent of the library's RNG helpers).
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  bool coin() { return index(2) == 1; }
  std::uint64_t raw() { return eng_(); }

  // Product prior over Boolean features with random biases in [0.1, 0.9].
  Prior boolean_prior(std::size_t dims) {
    std::vector<debate::FeatureDistribution> features;
    for (std::size_t i = 0; i < dims; ++i) {
      const double p = 0.1 + 0.8 * unit();
      features.push_back({{0.0, 1.0}, {1.0 - p, p}});
    }
    return Prior::product(std::move(features));
  }

  // Explicit prior on a random subset of {0,1}^dims with random masses.
  Prior explicit_prior(std::size_t dims) {
    std::vector<debate::WeightedWorld> atoms;
    double total = 0.0;
    for (std::size_t code = 0; code < (std::size_t{1} << dims); ++code) {
      if (code != 0 && index(3) == 0) continue;
      std::vector<double> v(dims);
      for (std::size_t i = 0; i < dims; ++i) v[i] = static_cast<double>((code >> i) & 1);
      const double m = 0.1 + unit();
      total += m;
      atoms.push_back({World(v), m});
    }
    for (auto& a : atoms) a.probability /= total;
    return Prior::explicit_support(std::move(atoms));
  }

  // Table question on a random subset of k features; dyadic values.
  Question table_question(std::size_t dims, std::size_t k) {
    std::vector<std::size_t> pool(dims);
    for (std::size_t i = 0; i < dims; ++i) pool[i] = i;
    std::shuffle(pool.begin(), pool.end(), eng_);
    std::vector<std::size_t> features(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(features.begin(), features.end());
    debate::questions::TableRows rows;
    for (std::size_t code = 0; code < (std::size_t{1} << k); ++code) {
      std::vector<double> key(k);
      for (std::size_t j = 0; j < k; ++j) key[j] = static_cast<double>((code >> j) & 1);
      rows[key] = static_cast<double>(index(65)) / 64.0;
    }
    return debate::questions::table(features, std::move(rows));
  }

  World boolean_world(std::size_t dims) {
    std::vector<double> v(dims);
    for (auto& x : v) x = coin() ? 1.0 : 0.0;
    return World(v);
  }

  // Evidence model with 2- or 3-valued features and strictly positive
  // class-conditional tables.
  debate::evidence::EvidenceModel evidence_model(std::size_t dims) {
    std::vector<debate::evidence::EvidenceFeature> features;
    for (std::size_t j = 0; j < dims; ++j) {
      const std::size_t arity = 2 + index(2);
      debate::evidence::EvidenceFeature f;
      for (std::size_t v = 0; v < arity; ++v) f.values.push_back(static_cast<double>(v) / (arity - 1));
      for (auto* t : {&f.p_given_x1, &f.p_given_x0}) {
        double total = 0;
        for (std::size_t v = 0; v < arity; ++v) {
          t->push_back(0.02 + unit());
          total += t->back();
        }
        for (auto& p : *t) p /= total;
      }
      features.push_back(std::move(f));
    }
    return debate::evidence::EvidenceModel(0.05 + 0.9 * unit(), std::move(features));
  }

  World evidence_world(const debate::evidence::EvidenceModel& m) {
    std::vector<double> v;
    for (const auto& f : m.features()) v.push_back(f.values[index(f.values.size())]);
    return World(v);
  }

 private:
  std::mt19937_64 eng_;
};

inline std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace oracle
