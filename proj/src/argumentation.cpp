#include "debate/argumentation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "debate/detail/minimax.hpp"
#include "debate/errors.hpp"
#include "debate/judge.hpp"

namespace debate {

namespace {

constexpr std::size_t kMaxLegal = 58;
constexpr double kPromotionTolerance = 1e-9;

// State: bitmask over positions in the sorted legal list.
class FeatureDebateGame {
 public:
  using State = std::uint64_t;

  FeatureDebateGame(const ArgGameSpec& spec, std::vector<FeatureIndex> legal)
      : spec_(spec), legal_(std::move(legal)) {}

  State root() const { return 0; }
  std::uint64_t key(State s) const { return s; }

  std::vector<FeatureIndex> moves(State s) const {
    std::vector<FeatureIndex> out;
    for (std::size_t k = 0; k < legal_.size(); ++k) {
      if (!(s & (std::uint64_t{1} << k))) out.push_back(legal_[k]);
    }
    if (spec_.pass_allowed || out.empty()) out.push_back(FeatureIndex::pass());
    return out;
  }

  State apply(State s, FeatureIndex move) const {
    if (move.is_pass()) return s;
    const auto k = std::lower_bound(legal_.begin(), legal_.end(), move) - legal_.begin();
    return s | (std::uint64_t{1} << k);
  }

  double leaf(State s) {
    if (auto it = leaves_.find(s); it != leaves_.end()) return it->second;
    RevealSet reveals;
    for (std::size_t k = 0; k < legal_.size(); ++k) {
      if (s & (std::uint64_t{1} << k)) reveals.push_back({legal_[k], spec_.world.at(legal_[k])});
    }
    const double belief = posterior_mean(spec_.prior, spec_.question, reveals);
    leaves_.emplace(s, belief);
    return belief;
  }

 private:
  const ArgGameSpec& spec_;
  std::vector<FeatureIndex> legal_;
  std::unordered_map<State, double> leaves_;
};

std::vector<FeatureIndex> legal_list(const ArgGameSpec& spec) {
  std::vector<FeatureIndex> legal = spec.legal_indices;
  if (legal.empty()) {
    for (auto i : spec.question.relevant_features()) legal.emplace_back(i);
  }
  std::erase_if(legal, [](FeatureIndex i) { return i.is_pass(); });
  std::sort(legal.begin(), legal.end());
  legal.erase(std::unique(legal.begin(), legal.end()), legal.end());
  for (auto i : legal) {
    if (i.value() >= spec.world.dimension()) {
      throw IndexOutOfRange("legal index " + i.to_string() + " beyond world dimension");
    }
  }
  if (legal.size() > kMaxLegal) throw std::invalid_argument("too many legal indices");
  return legal;
}

}  // namespace

ArgGameSpec make_spec(Prior prior, Question question, World world, int rounds, bool pass_allowed,
                      std::vector<FeatureIndex> extra) {
  std::vector<FeatureIndex> legal;
  for (auto i : question.relevant_features()) legal.emplace_back(i);
  legal.insert(legal.end(), extra.begin(), extra.end());
  return ArgGameSpec{std::move(prior), std::move(question), std::move(world), rounds,
                     pass_allowed, std::move(legal)};
}

MinimaxResult solve(const ArgGameSpec& spec) {
  if (spec.rounds < 1) throw std::invalid_argument("rounds must be at least 1");
  if (!spec.prior.supports(spec.world)) {
    throw std::invalid_argument("world " + spec.world.to_string() + " is not in the prior's support");
  }
  FeatureDebateGame game(spec, legal_list(spec));
  const int plies = 2 * spec.rounds;

  MinimaxResult result;
  detail::AlternatingMinimax<FeatureDebateGame> up_down(game, plies, true);
  result.value_up_down = up_down.value();
  result.line_up_down = up_down.line();
  detail::AlternatingMinimax<FeatureDebateGame> down_up(game, plies, false);
  result.value_down_up = down_up.value();
  result.line_down_up = down_up.line();
  return result;
}

double truth_promotion_bound(const MinimaxResult& result, double truth) {
  return std::max(std::abs(result.value_up_down - truth), std::abs(result.value_down_up - truth));
}

double truth_promotion_bound(const ArgGameSpec& spec) {
  return truth_promotion_bound(solve(spec), evaluate(spec.question, spec.world));
}

StallDepth stall_depth(const Question& base, const Question& wrapped, const Prior& prior,
                       const World& world, int max_rounds) {
  auto first_promoting = [&](const Question& q) {
    for (int n = 1; n <= max_rounds; ++n) {
      if (truth_promotion_bound(make_spec(prior, q, world, n)) <= kPromotionTolerance) return n;
    }
    throw NotPromotedWithin(q.label() + " is not truth-promoting within " +
                            std::to_string(max_rounds) + " rounds");
  };
  return StallDepth{first_promoting(base), first_promoting(wrapped)};
}

}  // namespace debate
