#pragma once

// Information-limited debate: each argument reveals the next binary digit
// of one feature, halving the cell of worlds consistent with the debate
// along that axis. Distances use rho(w, w') = sum_i 2^-(i+1) |w_i - w'_i|
// over 0-based i.

#include <cstddef>
#include <vector>

#include "debate/argumentation.hpp"
#include "debate/question.hpp"
#include "debate/world.hpp"

namespace debate::bits {

struct BitArgument {
  FeatureIndex feature;
  int position = 1;  // 1-based digit after the binary point
  int bit = 0;
};

// n-th binary digit of v in [0,1]. v = 1 is treated as 0.111... so that it
// falls in the last dyadic interval at every depth.
int bit_of(double v, int position);

// Product of dyadic intervals [lo_i, lo_i + 2^-revealed_i).
class Cell {
 public:
  // The unit cube in `dimension` features, each allowing `bit_budget` bits.
  Cell(std::size_t dimension, int bit_budget);

  std::size_t dimension() const { return lo_.size(); }
  int bit_budget() const { return budget_; }
  int revealed(std::size_t i) const { return revealed_[i]; }
  double lo(std::size_t i) const { return lo_[i]; }
  double length(std::size_t i) const;
  double hi(std::size_t i) const { return lo_[i] + length(i); }
  bool contains(const World& world) const;

  // Halves feature i's interval, keeping the upper half iff bit == 1.
  void halve(std::size_t i, int bit);

 private:
  int budget_;
  std::vector<double> lo_;
  std::vector<int> revealed_;
};

// Applies one truthful argument. Throws OutOfOrderBit unless the position is
// the next unrevealed digit within the budget, UntruthfulBit if the bit
// differs from w's, and IndexOutOfRange for a feature outside the cell.
// A PASS argument leaves the cell unchanged.
Cell zoom(const Cell& cell, const BitArgument& argument, const World& world);

// sum_i 2^-(i+1) * length_i: the rho-diameter of the cell.
double cell_diameter(const Cell& cell);

// First k terms of 0 | 0,1 | 0,1,2 | ... (0-based feature indices).
std::vector<std::size_t> triangular_sequence(int k);

// (n+2) / 2^(n+1): diameter guaranteed after 1+...+n triangular reveals.
double triangular_diameter_bound(int n);

// L / 2^floor(sqrt(N)).
double lipschitz_error_bound(double lipschitz, int rounds);

struct BitDebateSpec {
  Question question;
  World world;        // point whose digits are revealed
  int rounds = 1;     // N; 2N arguments
  int bit_budget = 1; // B digits per feature
  bool pass_allowed = true;
};

// Alternating minimax where each argument reveals the next digit of one
// feature (or PASS). The judge holds the uniform prior over the grid of
// cell midpoints (k + 1/2) / 2^B per feature, so its belief is the mean of
// f over the grid points left in the cell. Lines list the feature whose
// next digit each argument reveals.
MinimaxResult solve_bit_debate(const BitDebateSpec& spec);

// max{|value_up_down - f(w)|, |value_down_up - f(w)|} for the bit debate.
double bit_truth_promotion_bound(const BitDebateSpec& spec);

// Grid point (k + 1/2) / 2^B.
double grid_point(std::size_t k, int bit_budget);

}  // namespace debate::bits
