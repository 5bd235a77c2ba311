#include "debate/answering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "debate/argumentation.hpp"

namespace debate {

AnswerInterval::AnswerInterval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!(lo >= 0.0 && lo <= hi && hi <= 1.0)) {
    throw std::invalid_argument("answer interval must satisfy 0 <= lo <= hi <= 1, got [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

AnswerInterval::AnswerInterval(const MinimaxResult& result)
    : AnswerInterval(result.value_up_down, result.value_down_up) {}

double AnswerInterval::distance(double a) const { return std::max({lo_ - a, a - hi_, 0.0}); }

double second_mover_value(double a, double b, const AnswerInterval& interval) {
  return std::abs(a - b) - interval.distance(b);
}

double expected_payoff(double a1, double a2, const AnswerInterval& interval) {
  return 0.5 * second_mover_value(a2, a1, interval) - 0.5 * second_mover_value(a1, a2, interval);
}

EquilibriumAnswers equilibrium_answers(const AnswerInterval& interval) {
  return {interval.lo(), interval.hi()};
}

NashReport verify_nash(const AnswerInterval& interval, double grid_step) {
  if (!(grid_step > 0.0 && grid_step <= 1.0)) {
    throw std::invalid_argument("grid step must lie in (0, 1]");
  }
  constexpr double kEps = 1e-9;

  NashReport report;
  report.grid_step = grid_step;
  for (std::size_t k = 0;; ++k) {
    const double a = static_cast<double>(k) * grid_step;
    if (a > 1.0 + kEps) break;
    report.grid.push_back(std::min(a, 1.0));
  }
  if (report.grid.back() < 1.0 - kEps) report.grid.push_back(1.0);

  const auto& grid = report.grid;
  const std::size_t n = grid.size();
  std::vector<double> payoff(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) payoff[i * n + j] = expected_payoff(grid[i], grid[j], interval);
  }

  // Maxmin over pure rows.
  std::vector<double> security(n);
  for (std::size_t i = 0; i < n; ++i) {
    security[i] = *std::min_element(payoff.begin() + i * n, payoff.begin() + (i + 1) * n);
  }
  report.game_value = *std::max_element(security.begin(), security.end());
  std::vector<bool> optimal(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (security[i] >= report.game_value - kEps) {
      optimal[i] = true;
      report.equilibrium_answers.push_back(grid[i]);
    }
  }

  // Every pair of optimal answers must be a pure Nash equilibrium.
  for (std::size_t i = 0; i < n; ++i) {
    if (!optimal[i]) continue;
    bool stable = true;
    for (std::size_t j = 0; j < n && stable; ++j) {
      if (!optimal[j]) continue;
      const double v = payoff[i * n + j];
      for (std::size_t k = 0; k < n && stable; ++k) {
        stable = payoff[k * n + j] <= v + kEps && payoff[i * n + k] >= v - kEps;
      }
    }
    if (!stable) report.mismatches.push_back(grid[i]);
  }

  // Optimal grid answers must sit within one step of the interval, and every
  // grid answer inside it must be optimal.
  for (std::size_t i = 0; i < n; ++i) {
    const bool inside = interval.contains(grid[i], kEps);
    const bool near = interval.distance(grid[i]) <= grid_step + kEps;
    if (optimal[i] && !near) report.mismatches.push_back(grid[i]);
    if (!optimal[i] && inside) report.mismatches.push_back(grid[i]);
  }
  std::sort(report.mismatches.begin(), report.mismatches.end());
  report.mismatches.erase(std::unique(report.mismatches.begin(), report.mismatches.end()),
                          report.mismatches.end());
  return report;
}

}  // namespace debate
