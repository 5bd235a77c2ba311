#include "debate/info_limited.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "debate/detail/minimax.hpp"
#include "debate/errors.hpp"

namespace debate::bits {

int bit_of(double v, int position) {
  if (position < 1) throw std::invalid_argument("bit positions are 1-based");
  if (v >= 1.0) return 1;
  const double scaled = std::ldexp(v, position);
  return static_cast<int>(static_cast<long long>(std::floor(scaled)) & 1);
}

Cell::Cell(std::size_t dimension, int bit_budget)
    : budget_(bit_budget), lo_(dimension, 0.0), revealed_(dimension, 0) {
  if (dimension == 0) throw std::invalid_argument("cell needs at least one dimension");
  if (bit_budget < 1 || bit_budget > 30) throw std::invalid_argument("bit budget must be in [1, 30]");
}

double Cell::length(std::size_t i) const { return std::ldexp(1.0, -revealed_[i]); }

bool Cell::contains(const World& world) const {
  if (world.dimension() != dimension()) return false;
  for (std::size_t i = 0; i < dimension(); ++i) {
    const double v = world[i];
    const bool top = hi(i) >= 1.0 && v == 1.0;
    if (!(v >= lo_[i] && (v < hi(i) || top))) return false;
  }
  return true;
}

void Cell::halve(std::size_t i, int bit) {
  ++revealed_[i];
  if (bit) lo_[i] += length(i);
}

Cell zoom(const Cell& cell, const BitArgument& argument, const World& world) {
  if (argument.feature.is_pass()) return cell;
  const auto i = argument.feature.value();
  if (i >= cell.dimension() || i >= world.dimension()) {
    throw IndexOutOfRange("feature " + argument.feature.to_string() + " outside the cell");
  }
  if (argument.position != cell.revealed(i) + 1 || argument.position > cell.bit_budget()) {
    throw OutOfOrderBit("feature " + std::to_string(i) + " expects bit " +
                        std::to_string(cell.revealed(i) + 1) + ", got " +
                        std::to_string(argument.position));
  }
  if (argument.bit != bit_of(world[i], argument.position)) {
    throw UntruthfulBit("bit " + std::to_string(argument.position) + " of feature " +
                        std::to_string(i) + " is not " + std::to_string(argument.bit));
  }
  Cell next = cell;
  next.halve(i, argument.bit);
  return next;
}

double cell_diameter(const Cell& cell) {
  double total = 0.0;
  for (std::size_t i = 0; i < cell.dimension(); ++i) {
    total += std::ldexp(cell.length(i), -static_cast<int>(i + 1));
  }
  return total;
}

std::vector<std::size_t> triangular_sequence(int k) {
  if (k < 1) throw std::invalid_argument("sequence length must be at least 1");
  std::vector<std::size_t> out;
  out.reserve(k);
  for (std::size_t block = 1; static_cast<int>(out.size()) < k; ++block) {
    for (std::size_t i = 0; i < block && static_cast<int>(out.size()) < k; ++i) out.push_back(i);
  }
  return out;
}

double triangular_diameter_bound(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  return (n + 2) / std::ldexp(1.0, n + 1);
}

double lipschitz_error_bound(double lipschitz, int rounds) {
  if (lipschitz < 0.0) throw std::invalid_argument("Lipschitz constant must be non-negative");
  if (rounds < 1) throw std::invalid_argument("rounds must be at least 1");
  int root = static_cast<int>(std::sqrt(static_cast<double>(rounds)));
  while ((root + 1) * (root + 1) <= rounds) ++root;
  while (root * root > rounds) --root;
  return lipschitz / std::ldexp(1.0, root);
}

double grid_point(std::size_t k, int bit_budget) {
  return (static_cast<double>(k) + 0.5) / std::ldexp(1.0, bit_budget);
}

namespace {

// State: digits revealed per feature. The revealed digits themselves are
// fixed by the world, so counts determine the cell.
class BitDebateGame {
 public:
  using State = std::vector<int>;

  explicit BitDebateGame(const BitDebateSpec& spec) : spec_(spec) {}

  State root() const { return State(spec_.world.dimension(), 0); }

  std::uint64_t key(const State& s) const {
    std::uint64_t k = 0;
    for (std::size_t i = s.size(); i-- > 0;) k = k * (spec_.bit_budget + 1) + s[i];
    return k;
  }

  std::vector<FeatureIndex> moves(const State& s) const {
    std::vector<FeatureIndex> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < spec_.bit_budget) out.emplace_back(i);
    }
    if (spec_.pass_allowed || out.empty()) out.push_back(FeatureIndex::pass());
    return out;
  }

  State apply(const State& s, FeatureIndex move) const {
    if (move.is_pass()) return s;
    State next = s;
    ++next[move.value()];
    return next;
  }

  // Mean of f over the grid points inside the cell.
  double leaf(const State& s) {
    const auto k = key(s);
    if (auto it = leaves_.find(k); it != leaves_.end()) return it->second;

    const std::size_t dim = s.size();
    const int budget = spec_.bit_budget;
    std::vector<std::size_t> first(dim), count(dim), digit(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      // Grid index of w_i's cell at full depth, truncated to the revealed prefix.
      std::size_t full = 0;
      for (int p = 1; p <= budget; ++p) full = (full << 1) | bit_of(spec_.world[i], p);
      const int hidden = budget - s[i];
      first[i] = (full >> hidden) << hidden;
      count[i] = std::size_t{1} << hidden;
    }
    std::vector<double> values(dim);
    double total = 0.0;
    std::size_t points = 0;
    while (true) {
      for (std::size_t i = 0; i < dim; ++i) values[i] = grid_point(first[i] + digit[i], budget);
      total += spec_.question(World(values));
      ++points;
      std::size_t i = 0;
      for (; i < dim; ++i) {
        if (++digit[i] < count[i]) break;
        digit[i] = 0;
      }
      if (i == dim) break;
    }
    const double mean = total / static_cast<double>(points);
    leaves_.emplace(k, mean);
    return mean;
  }

 private:
  const BitDebateSpec& spec_;
  std::unordered_map<std::uint64_t, double> leaves_;
};

}  // namespace

MinimaxResult solve_bit_debate(const BitDebateSpec& spec) {
  if (spec.rounds < 1) throw std::invalid_argument("rounds must be at least 1");
  if (spec.bit_budget < 1 || spec.bit_budget > 16) {
    throw std::invalid_argument("bit budget must be in [1, 16]");
  }
  if (spec.world.dimension() < spec.question.min_dimension()) {
    throw IndexOutOfRange("question reads features beyond the world's dimension");
  }
  BitDebateGame game(spec);
  const int plies = 2 * spec.rounds;
  MinimaxResult result;
  detail::AlternatingMinimax<BitDebateGame> up_down(game, plies, true);
  result.value_up_down = up_down.value();
  result.line_up_down = up_down.line();
  detail::AlternatingMinimax<BitDebateGame> down_up(game, plies, false);
  result.value_down_up = down_up.value();
  result.line_down_up = down_up.line();
  return result;
}

double bit_truth_promotion_bound(const BitDebateSpec& spec) {
  return truth_promotion_bound(solve_bit_debate(spec), evaluate(spec.question, spec.world));
}

}  // namespace debate::bits
