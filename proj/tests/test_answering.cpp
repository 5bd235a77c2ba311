#include "doctest.h"

#include "debate/answering.hpp"
#include "debate/argumentation.hpp"
#include "oracles.hpp"

using namespace debate;

namespace {

// Player 1's utility averaged over a fair argument order, computed by
// playing the solved argument game: the higher answer pushes the belief up,
// so the final belief is lo when it argues first and hi otherwise.
double played_payoff(double a1, double a2, double lo, double hi) {
  if (a1 == a2) return 0.0;
  auto u1 = [&](double belief) { return std::abs(belief - a2) - std::abs(belief - a1); };
  const bool one_is_up = a1 > a2;
  const double one_first = one_is_up ? lo : hi;
  const double two_first = one_is_up ? hi : lo;
  return 0.5 * (u1(one_first) + u1(two_first));
}

std::vector<double> equilibrium_grid(double lo, double hi, const std::vector<double>& grid) {
  const std::size_t n = grid.size();
  std::vector<double> security(n);
  for (std::size_t i = 0; i < n; ++i) {
    security[i] = 1e9;
    for (std::size_t j = 0; j < n; ++j) security[i] = std::min(security[i], played_payoff(grid[i], grid[j], lo, hi));
  }
  const double value = *std::max_element(security.begin(), security.end());
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (security[i] >= value - 1e-9) out.push_back(grid[i]);
  }
  return out;
}

}  // namespace

TEST_CASE("AnswerInterval validation and geometry") {
  CHECK_THROWS_AS(AnswerInterval(0.6, 0.4), std::invalid_argument);
  CHECK_THROWS_AS(AnswerInterval(-0.1, 0.4), std::invalid_argument);
  CHECK_THROWS_AS(AnswerInterval(0.1, 1.4), std::invalid_argument);
  const AnswerInterval i(0.2, 0.4);
  CHECK(i.width() == doctest::Approx(0.2));
  CHECK(i.midpoint() == doctest::Approx(0.3));
  CHECK(i.distance(0.1) == doctest::Approx(0.1));
  CHECK(i.distance(0.3) == 0.0);
  CHECK(i.distance(0.9) == doctest::Approx(0.5));
}

TEST_CASE("second_mover_value examples") {
  CHECK(second_mover_value(0.0, 0.5, AnswerInterval(0.4, 0.6)) == doctest::Approx(0.5));
  CHECK(second_mover_value(0.3, 0.3, AnswerInterval(0.4, 0.6)) == doctest::Approx(-0.1));
  CHECK(second_mover_value(0.5, 0.5, AnswerInterval(0.4, 0.6)) == 0.0);
  CHECK(second_mover_value(1.0, 0.0, AnswerInterval(0.5, 0.5)) == doctest::Approx(0.5));
}

TEST_CASE("expected_payoff examples") {
  CHECK(expected_payoff(0.45, 0.55, AnswerInterval(0.4, 0.6)) == 0.0);
  CHECK(expected_payoff(0.5, 0.9, AnswerInterval(0.4, 0.6)) == doctest::Approx(0.15));
  CHECK(expected_payoff(0.5, 0.0, AnswerInterval(0.2, 0.4)) == doctest::Approx(0.05));
}

// Averaged over both orders the final belief is lo once and hi once, so the
// played game pays dist(a2) - dist(a1): twice the closed form. A positive
// factor leaves the equilibrium set unchanged.
TEST_CASE("property: closed-form payoff is half the played game") {
  oracle::Gen gen(17);
  for (int trial = 0; trial < 500; ++trial) {
    double lo = gen.unit(), hi = gen.unit();
    if (lo > hi) std::swap(lo, hi);
    const double a1 = gen.unit(), a2 = gen.unit();
    CHECK(2.0 * expected_payoff(a1, a2, AnswerInterval(lo, hi)) ==
          doctest::Approx(played_payoff(a1, a2, lo, hi)).epsilon(1e-12));
    CHECK(expected_payoff(a1, a2, AnswerInterval(lo, hi)) == doctest::Approx(-expected_payoff(a2, a1, AnswerInterval(lo, hi))));
  }
}

TEST_CASE("equilibrium_answers examples") {
  CHECK(equilibrium_answers(AnswerInterval(0.5, 0.5)).unique());
  CHECK(equilibrium_answers(AnswerInterval(0.5, 0.5)).lo == 0.5);
  const auto all = equilibrium_answers(AnswerInterval(0.0, 1.0));
  CHECK(all.lo == 0.0);
  CHECK(all.hi == 1.0);
  const auto mid = equilibrium_answers(AnswerInterval(0.3, 0.7));
  CHECK(mid.lo == 0.3);
  CHECK(mid.hi == 0.7);
  CHECK_FALSE(mid.unique());
}

TEST_CASE("verify_nash examples") {
  SUBCASE("singleton") {
    const auto r = verify_nash(AnswerInterval(0.5, 0.5), 0.01);
    CHECK(r.ok());
    REQUIRE(r.equilibrium_answers.size() == 1);
    CHECK(r.equilibrium_answers[0] == doctest::Approx(0.5));
  }
  SUBCASE("whole answer space, coarse grid") {
    const auto r = verify_nash(AnswerInterval(0.0, 1.0), 0.25);
    CHECK(r.ok());
    CHECK(r.grid == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
    CHECK(r.equilibrium_answers == r.grid);
  }
  SUBCASE("interior interval") {
    const auto r = verify_nash(AnswerInterval(0.4, 0.6), 0.1);
    CHECK(r.ok());
    REQUIRE(r.equilibrium_answers.size() == 3);
    CHECK(r.equilibrium_answers[0] == doctest::Approx(0.4));
    CHECK(r.equilibrium_answers[1] == doctest::Approx(0.5));
    CHECK(r.equilibrium_answers[2] == doctest::Approx(0.6));
  }
  CHECK_THROWS_AS(verify_nash(AnswerInterval(0, 1), 1.5), std::invalid_argument);
  CHECK_THROWS_AS(verify_nash(AnswerInterval(0, 1), 0.0), std::invalid_argument);
}

TEST_CASE("property: verify_nash agrees with a played-game enumeration") {
  oracle::Gen gen(404);
  for (int trial = 0; trial < 40; ++trial) {
    double lo = gen.unit(), hi = gen.unit();
    if (lo > hi) std::swap(lo, hi);
    const auto report = verify_nash(AnswerInterval(lo, hi), 0.05);
    CHECK(report.ok());
    CHECK(report.equilibrium_answers == equilibrium_grid(lo, hi, report.grid));
  }
}
