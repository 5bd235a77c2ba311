#pragma once

// Memoized alternating max/min search shared by the feature debate and the
// bit-revelation debate.
//
// A Game provides:
//   using State = ...;
//   State root() const;
//   std::uint64_t key(const State&) const;          // injective on reachable states
//   std::vector<FeatureIndex> moves(const State&) const;  // preference order, never empty
//   State apply(const State&, FeatureIndex) const;
//   double leaf(const State&);                      // judge's belief at the end

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "debate/world.hpp"

namespace debate::detail {

// A move replaces the incumbent only if it beats it by more than this, so
// ties resolve toward the earlier move in preference order.
inline constexpr double kTieTolerance = 1e-12;

template <typename Game>
class AlternatingMinimax {
 public:
  using State = typename Game::State;

  AlternatingMinimax(Game& game, int plies, bool first_maximizes)
      : game_(game), plies_(plies), first_maximizes_(first_maximizes) {}

  double value() { return search(game_.root(), plies_); }

  // The principal line: best responses from the root, one per ply.
  std::vector<FeatureIndex> line() {
    std::vector<FeatureIndex> out;
    out.reserve(plies_);
    State state = game_.root();
    for (int remaining = plies_; remaining > 0; --remaining) {
      search(state, remaining);
      const auto move = memo_.at(Key{game_.key(state), remaining}).best;
      out.push_back(move);
      state = game_.apply(state, move);
    }
    return out;
  }

 private:
  struct Key {
    std::uint64_t state;
    int remaining;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<std::uint64_t>{}(k.state * 0x9E3779B97F4A7C15ull + k.remaining);
    }
  };
  struct Node {
    double value;
    FeatureIndex best;
  };

  double search(const State& state, int remaining) {
    if (remaining == 0) return game_.leaf(state);
    const Key key{game_.key(state), remaining};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.value;

    const bool maximizing = ((plies_ - remaining) % 2 == 0) == first_maximizes_;
    Node node{0.0, FeatureIndex::pass()};
    bool first = true;
    for (auto move : game_.moves(state)) {
      const double v = search(game_.apply(state, move), remaining - 1);
      const bool better = maximizing ? v > node.value + kTieTolerance
                                     : v < node.value - kTieTolerance;
      if (first || better) {
        node = {v, move};
        first = false;
      }
    }
    memo_.emplace(key, node);
    return node.value;
  }

  Game& game_;
  int plies_;
  bool first_maximizes_;
  std::unordered_map<Key, Node, KeyHash> memo_;
};

}  // namespace debate::detail
