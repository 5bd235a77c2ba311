#include "debate/question.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "debate/errors.hpp"

namespace debate {

namespace {

bool is_one(double v) { return same_value(v, 1.0); }

std::vector<std::size_t> first_k(std::size_t k) {
  std::vector<std::size_t> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = i;
  return out;
}

void require_positive(std::size_t k, const char* family) {
  if (k == 0) throw std::invalid_argument(std::string(family) + " needs at least one feature");
}

}  // namespace

Question::Question(std::string label, std::vector<std::size_t> relevant, Evaluator evaluator)
    : label_(std::move(label)), relevant_(std::move(relevant)), evaluator_(std::move(evaluator)) {
  std::sort(relevant_.begin(), relevant_.end());
  relevant_.erase(std::unique(relevant_.begin(), relevant_.end()), relevant_.end());
  if (!evaluator_) throw std::invalid_argument("question needs an evaluator");
}

double evaluate(const Question& question, const World& world) {
  if (world.dimension() < question.min_dimension()) {
    throw IndexOutOfRange("question " + question.label() + " needs dimension " +
                          std::to_string(question.min_dimension()) + ", world has " +
                          std::to_string(world.dimension()));
  }
  return question(world);
}

double deviation(const Question& question, double answer, const World& world) {
  return std::abs(evaluate(question, world) - answer);
}

double stall_gate(double x, double y) {
  return (!is_one(x) || is_one(y)) ? 1.0 : 0.0;
}

namespace questions {

Question conjunction(std::size_t k) {
  require_positive(k, "conjunction");
  return Question("conjunction(" + std::to_string(k) + ")", first_k(k), [k](const World& w) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!is_one(w[i])) return 0.0;
    }
    return 1.0;
  });
}

Question parity(std::size_t k) {
  require_positive(k, "xor");
  return Question("xor(" + std::to_string(k) + ")", first_k(k), [k](const World& w) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < k; ++i) ones += is_one(w[i]) ? 1 : 0;
    return (ones % 2 == 1) ? 1.0 : 0.0;
  });
}

Question product(std::size_t k) {
  require_positive(k, "product");
  return Question("product(" + std::to_string(k) + ")", first_k(k), [k](const World& w) {
    double p = 1.0;
    for (std::size_t i = 0; i < k; ++i) p *= w[i];
    return p;
  });
}

Question weighted_linear(std::size_t dims) {
  require_positive(dims, "weighted_linear");
  return Question("weighted_linear(" + std::to_string(dims) + ")", first_k(dims),
                  [dims](const World& w) {
                    double total = 0.0;
                    double weight = 0.5;
                    for (std::size_t i = 0; i < dims; ++i, weight *= 0.5) total += weight * w[i];
                    return total;
                  });
}

Question table(std::vector<std::size_t> features, TableRows rows, std::string label) {
  for (const auto& [key, value] : rows) {
    if (key.size() != features.size()) {
      throw std::invalid_argument("table row width does not match feature count");
    }
    if (!(value >= 0.0 && value <= 1.0)) {
      throw std::invalid_argument("table value outside [0,1]");
    }
  }
  auto order = features;
  return Question(std::move(label), std::move(features),
                  [order = std::move(order), rows = std::move(rows)](const World& w) {
                    std::vector<double> key;
                    key.reserve(order.size());
                    for (auto i : order) key.push_back(w[i]);
                    auto it = rows.find(key);
                    if (it == rows.end()) {
                      // Fall back to tolerant matching for values that went
                      // through arithmetic.
                      for (auto r = rows.begin(); r != rows.end(); ++r) {
                        bool equal = true;
                        for (std::size_t j = 0; j < key.size() && equal; ++j) {
                          equal = same_value(r->first[j], key[j]);
                        }
                        if (equal) return r->second;
                      }
                      throw std::out_of_range("table question has no row for " + w.to_string());
                    }
                    return it->second;
                  });
}

Question constant(double value) {
  if (!(value >= 0.0 && value <= 1.0)) throw std::invalid_argument("constant outside [0,1]");
  char buf[64];
  std::snprintf(buf, sizeof buf, "constant(%.12g)", value);
  return Question(buf, {}, [value](const World&) { return value; });
}

Question stall_wrapped(const Question& base,
                       std::vector<std::pair<std::size_t, std::size_t>> gates) {
  auto relevant = base.relevant_features();
  std::string label = "stall(" + base.label();
  for (const auto& [m, n] : gates) {
    relevant.push_back(m);
    relevant.push_back(n);
    label += ";" + std::to_string(m) + "," + std::to_string(n);
  }
  label += ")";
  return Question(std::move(label), std::move(relevant),
                  [base, gates = std::move(gates)](const World& w) {
                    double value = base(w);
                    for (const auto& [m, n] : gates) value *= stall_gate(w[m], w[n]);
                    return value;
                  });
}

Question chain_stall(const Question& base, std::size_t problem, std::vector<std::size_t> fixes) {
  if (fixes.empty()) throw std::invalid_argument("chain stall needs at least one fix feature");
  auto relevant = base.relevant_features();
  relevant.push_back(problem);
  relevant.insert(relevant.end(), fixes.begin(), fixes.end());
  std::string label = "chain_stall(" + base.label() + ";" + std::to_string(problem) + ";";
  for (std::size_t j = 0; j < fixes.size(); ++j) {
    label += (j ? "," : "") + std::to_string(fixes[j]);
  }
  label += ")";
  return Question(std::move(label), std::move(relevant),
                  [base, problem, fixes = std::move(fixes)](const World& w) {
                    bool all_fixed = true;
                    for (auto y : fixes) all_fixed = all_fixed && is_one(w[y]);
                    return base(w) * stall_gate(w[problem], all_fixed ? 1.0 : 0.0);
                  });
}

}  // namespace questions
}  // namespace debate
