#include "doctest.h"

#include <algorithm>

#include "debate/engine.hpp"
#include "debate/errors.hpp"
#include "oracles.hpp"

using namespace debate;

namespace {

DebateSetup setup_of(Prior prior, Question q, int rounds) {
  return DebateSetup{std::move(prior), std::move(q), rounds, true, {}};
}

}  // namespace

TEST_CASE("play_debate examples") {
  SUBCASE("questions on at most N features end with zero error") {
    oracle::Gen gen(1);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = gen.integer(1, 3);
      const auto setup = setup_of(gen.boolean_prior(n + 1), gen.table_question(n + 1, 1 + gen.index(n)), n);
      for (const auto& policy : {AnswerPolicy::optimal_lo(), AnswerPolicy::optimal_hi(), AnswerPolicy::midpoint()}) {
        const auto t = play_debate(setup, policy, gen.raw());
        CHECK(t.error == doctest::Approx(0.0).epsilon(1e-12));
      }
    }
  }
  SUBCASE("xor with equal answers 1/2") {
    for (int n = 1; n <= 3; ++n) {
      const auto setup = setup_of(Prior::uniform_boolean(n + 1), questions::parity(n + 1), n);
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto t = play_debate(setup, AnswerPolicy::scripted(0.5, 0.5), seed);
        CHECK(t.u1 == 0.0);
        CHECK(t.u2 == 0.0);
        CHECK(t.outcome == 0.5);
        CHECK(t.error == doctest::Approx(0.5));
        CHECK(t.coin_tie_break);
      }
    }
  }
  SUBCASE("equal scripted answers always tie") {
    const auto setup = setup_of(Prior::uniform_boolean(3), questions::conjunction(3), 1);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto t = play_debate(setup, AnswerPolicy::scripted(0.3, 0.3), seed);
      CHECK(t.u1 == 0.0);
      CHECK(t.u2 == 0.0);
    }
  }
}

TEST_CASE("property: transcript invariants") {
  oracle::Gen gen(77);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dims = 2 + gen.index(3);
    const int n = gen.integer(1, 2);
    const auto setup = setup_of(gen.boolean_prior(dims), gen.table_question(dims, 1 + gen.index(dims)), n);
    const auto policy = gen.coin() ? AnswerPolicy::scripted(gen.unit(), gen.unit())
                                   : (gen.coin() ? AnswerPolicy::optimal_lo() : AnswerPolicy::optimal_hi());
    const auto seed = gen.raw();
    const auto t = play_debate(setup, policy, seed);

    CHECK(t.u1 + t.u2 == 0.0);
    CHECK(t.arguments.size() == static_cast<std::size_t>(2 * n));
    if (t.u1 > t.u2) CHECK(t.winner == Player::one);
    if (t.u1 < t.u2) CHECK(t.winner == Player::two);
    CHECK(t.outcome == (t.winner == Player::one ? t.a1 : t.a2));
    CHECK(t.error == doctest::Approx(std::abs(t.outcome - t.truth)));
    CHECK(t.truth == evaluate(setup.question, t.world));

    if (t.experiment.is_pass()) {
      CHECK(std::all_of(t.arguments.begin(), t.arguments.end(), [](auto a) { return a.is_pass(); }));
    } else {
      CHECK(std::find(t.arguments.begin(), t.arguments.end(), t.experiment) != t.arguments.end());
      CHECK(t.experiment_result == t.world[t.experiment.value()]);
    }

    const auto again = play_debate(setup, policy, seed);
    CHECK(again.world == t.world);
    CHECK(again.arguments == t.arguments);
    CHECK(again.winner == t.winner);
    CHECK(again.first_mover == t.first_mover);
    CHECK(again.experiment == t.experiment);

    // Optimal answers: the realized error lies between the best and worst
    // deviation attainable inside the interval.
    if (policy.kind != AnswerPolicy::Kind::scripted) {
      const auto solved = solve(setup.spec_for(t.world));
      const AnswerInterval lambda(solved);
      CHECK(t.error <= worst_case_error(setup, t.world) + 1e-12);
      CHECK(t.error >= lambda.distance(t.truth) - 1e-12);
    }
  }
}

TEST_CASE("first mover and tie-break coins are fair") {
  const auto setup = setup_of(Prior::uniform_boolean(2), questions::conjunction(2), 1);
  int first_one = 0, winner_one = 0;
  constexpr int kDebates = 4000;
  for (int s = 0; s < kDebates; ++s) {
    const auto t = play_debate(setup, AnswerPolicy::scripted(0.4, 0.4), s);
    first_one += t.first_mover == Player::one;
    winner_one += t.winner == Player::one;
  }
  CHECK(std::abs(first_one / double(kDebates) - 0.5) < 0.03);
  CHECK(std::abs(winner_one / double(kDebates) - 0.5) < 0.03);
}

TEST_CASE("worst_case_error matches the truth-promotion bound") {
  for (int n = 1; n <= 3; ++n) {
    const auto setup = setup_of(Prior::bernoulli(n + 1, 0.01), questions::conjunction(n + 1), n);
    CHECK(worst_case_error(setup, World(std::vector<double>(n + 1, 1.0))) == doctest::Approx(0.99));
  }
}

TEST_CASE("expected_error examples") {
  for (int n = 1; n <= 3; ++n) {
    const auto setup = setup_of(Prior::uniform_boolean(n + 1), questions::parity(n + 1), n);
    CHECK(expected_error(setup, AnswerSelection::worst_in_lambda) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(expected_error(setup, AnswerSelection::midpoint_of_lambda) == doctest::Approx(0.5).epsilon(1e-12));
  }
  const auto constant = setup_of(Prior::uniform_boolean(2), questions::constant(0.7), 1);
  CHECK(expected_error(constant, AnswerSelection::worst_in_lambda) == 0.0);
  const auto conj = setup_of(Prior::uniform_boolean(2), questions::conjunction(2), 2);
  CHECK(expected_error(conj, AnswerSelection::worst_in_lambda) == doctest::Approx(0.0));
}

TEST_CASE("property: expected_error is the mass-weighted mean over the full support") {
  oracle::Gen gen(5150);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t dims = 2 + gen.index(2);
    const auto prior = gen.boolean_prior(dims);
    const auto q = gen.table_question(dims, dims);
    const int n = 1;
    const auto setup = setup_of(prior, q, n);
    double worst = 0.0, mid = 0.0;
    for (const auto& a : oracle::atoms(prior)) {
      const World w(a.values);
      const auto ref = oracle::solve(prior, q, w, n, oracle::iota(dims));
      const double f = q(w);
      worst += a.p * std::max(std::abs(ref.up_down - f), std::abs(ref.down_up - f));
      mid += a.p * std::abs(0.5 * (ref.up_down + ref.down_up) - f);
    }
    CHECK(expected_error(setup, AnswerSelection::worst_in_lambda) == doctest::Approx(worst).epsilon(1e-12));
    CHECK(expected_error(setup, AnswerSelection::midpoint_of_lambda) == doctest::Approx(mid).epsilon(1e-12));
  }
}

TEST_CASE("last_mover_advantage examples") {
  const auto setup = setup_of(Prior::uniform_boolean(2), questions::conjunction(2), 1);
  const World w({1, 1});
  const auto lambda = AnswerInterval(solve(setup.spec_for(w)));
  CHECK(last_mover_advantage(setup, w, lambda.lo(), lambda.lo()) == 0.0);
  CHECK_THROWS_AS(last_mover_advantage(setup, w, lambda.hi() + 0.1, lambda.lo()), AnswersOutsideLambda);

  // Near-extreme oscillating interval: small skew makes Lambda almost [0,1].
  const auto osc = setup_of(Prior::bernoulli(6, 0.01), questions::parity(6), 3);
  const World ones({1, 1, 1, 1, 1, 1});
  const auto wide = AnswerInterval(solve(osc.spec_for(ones)));
  CHECK(wide.width() > 0.9);
  CHECK(last_mover_advantage(osc, ones, wide.lo(), wide.hi()) == doctest::Approx(wide.width()).epsilon(1e-12));
}

TEST_CASE("property: last-mover advantage equals |a1 - a2| inside the interval") {
  oracle::Gen gen(2718);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dims = 2 + gen.index(3);
    const auto prior = gen.boolean_prior(dims);
    const auto setup = setup_of(prior, gen.table_question(dims, dims), gen.integer(1, 2));
    const auto w = gen.boolean_world(dims);
    const auto lambda = AnswerInterval(solve(setup.spec_for(w)));
    const double a1 = lambda.lo() + gen.unit() * lambda.width();
    const double a2 = lambda.lo() + gen.unit() * lambda.width();
    CHECK(last_mover_advantage(setup, w, a1, a2) == doctest::Approx(std::abs(a1 - a2)).epsilon(1e-9));
  }
}

TEST_CASE("oscillation_profile examples") {
  SUBCASE("constant question never changes side") {
    const auto setup = setup_of(Prior::uniform_boolean(3), questions::constant(0.4), 2);
    CHECK(oscillation_profile(setup, World({1, 0, 1})).side_changes == 0);
  }
  SUBCASE("conjunction, honest line is monotone") {
    const auto setup = setup_of(Prior::uniform_boolean(2), questions::conjunction(2), 2);
    const auto p = oscillation_profile(setup, World({1, 1}), true);
    CHECK(p.side_changes == 0);
    for (std::size_t k = 1; k < p.trajectory.size(); ++k) {
      CHECK(p.trajectory[k].belief >= p.trajectory[k - 1].belief - 1e-12);
    }
    CHECK(p.trajectory.back().belief == 1.0);
  }
  SUBCASE("skewed xor: optimal lines reveal only the ones that help") {
    // Closed form: after r ones, belief is (1 +/- 0.9^(6-r)) / 2 for odd/even r.
    // Max-first ends on the minimizer, who settles at r = 2; min-first ends on
    // the maximizer, who settles at r = 3.
    const auto setup = setup_of(Prior::bernoulli(6, 0.05), questions::parity(6), 3);
    const World ones({1, 1, 1, 1, 1, 1});
    const auto up = oscillation_profile(setup, ones, true);
    const auto down = oscillation_profile(setup, ones, false);
    CHECK(up.trajectory.back().belief == doctest::Approx((1 - std::pow(0.9, 4)) / 2).epsilon(1e-12));
    CHECK(down.trajectory.back().belief == doctest::Approx((1 + std::pow(0.9, 3)) / 2).epsilon(1e-12));
    CHECK(up.prior_mean == doctest::Approx((1 - std::pow(0.9, 6)) / 2).epsilon(1e-12));
  }
}

TEST_CASE("count_crossings") {
  BeliefTrajectory t;
  for (double b : {0.3, 0.7, 0.5, 0.2, 0.9, 0.9, 0.1}) t.push_back({{}, b});
  CHECK(count_crossings(t, 0.5) == 4);
  CHECK(count_crossings(t, 0.0) == 0);
}

TEST_CASE("support_worlds covers product priors over relevant features only") {
  const auto worlds = support_worlds(Prior::bernoulli(4, 0.2), questions::conjunction(2));
  REQUIRE(worlds.size() == 4);
  double total = 0.0;
  for (const auto& w : worlds) {
    total += w.probability;
    CHECK(w.world[2] == 0.0);
    CHECK(w.world[3] == 0.0);
  }
  CHECK(total == doctest::Approx(1.0));
  CHECK(worlds.back().world == World({1, 1, 0, 0}));
  CHECK(worlds.back().probability == doctest::Approx(0.04));
}
