#pragma once

// Questions "what is f(w)?" for f : worlds -> [0,1], and the counterexample
// families used to probe debate designs.

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "debate/world.hpp"

namespace debate {

class Question {
 public:
  using Evaluator = std::function<double(const World&)>;

  // `relevant` is the set of features f may depend on; it is sorted and
  // deduplicated. The evaluator must only read those coordinates.
  Question(std::string label, std::vector<std::size_t> relevant, Evaluator evaluator);

  const std::string& label() const { return label_; }
  const std::vector<std::size_t>& relevant_features() const { return relevant_; }
  // Smallest world dimension the evaluator can be applied to.
  std::size_t min_dimension() const { return relevant_.empty() ? 0 : relevant_.back() + 1; }

  double operator()(const World& world) const { return evaluator_(world); }

 private:
  std::string label_;
  std::vector<std::size_t> relevant_;
  Evaluator evaluator_;
};

// f(w). Throws IndexOutOfRange if w is too short for the relevant features.
double evaluate(const Question& question, const World& world);

// Deviation from truth |f(w) - answer|.
double deviation(const Question& question, double answer, const World& world);

// S(x, y) = 1 iff x != 1 or x = y = 1. Zero exactly on the "unlikely
// problem" x = 1 without its fix.
double stall_gate(double x, double y);

namespace questions {

// W_0 and ... and W_{k-1}, reading a feature as true iff it equals 1.
Question conjunction(std::size_t k);
// Parity of the number of features among W_0..W_{k-1} equal to 1.
Question parity(std::size_t k);
// prod_{i<k} w_i.
Question product(std::size_t k);
// sum_{i<dims} 2^-(i+1) w_i; 1-Lipschitz in the weighted metric of the
// information-limited debate.
Question weighted_linear(std::size_t dims);

// Lookup table keyed by the tuple of values of `features` (in the given
// order). Evaluating a world whose tuple is missing throws std::out_of_range.
using TableRows = std::map<std::vector<double>, double>;
Question table(std::vector<std::size_t> features, TableRows rows, std::string label = "table");
Question constant(double value);

// f'(w) = f(w) * prod_j S(w_{m_j}, w_{n_j}).
Question stall_wrapped(const Question& base, std::vector<std::pair<std::size_t, std::size_t>> gates);
// f'(w) = f(w) * S(w_m, [w_{y_1} = 1 and ... and w_{y_k} = 1]).
Question chain_stall(const Question& base, std::size_t problem, std::vector<std::size_t> fixes);

}  // namespace questions
}  // namespace debate
