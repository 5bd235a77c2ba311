#include "doctest.h"

#include <cmath>
#include <limits>

#include "debate/errors.hpp"
#include "debate/info_limited.hpp"
#include "oracles.hpp"

using namespace debate;
using namespace debate::bits;

namespace {

// Left end of w's dyadic interval of length 2^-r.
double dyadic_lo(double v, int r) {
  const double scale = std::pow(2.0, r);
  if (v >= 1.0) return 1.0 - 1.0 / scale;
  return std::floor(v * scale) / scale;
}

// Mean of f over every full-grid point inside the cell, by filtering.
double grid_mean(const Question& q, const World& w, const std::vector<int>& revealed, int budget) {
  const std::size_t dim = revealed.size();
  const std::size_t side = std::size_t{1} << budget;
  std::size_t total_points = 1;
  for (std::size_t i = 0; i < dim; ++i) total_points *= side;
  double sum = 0.0;
  std::size_t inside = 0;
  std::vector<double> point(dim);
  for (std::size_t code = 0; code < total_points; ++code) {
    std::size_t rest = code;
    bool ok = true;
    for (std::size_t i = 0; i < dim; ++i) {
      point[i] = ((rest % side) + 0.5) / static_cast<double>(side);
      rest /= side;
      const double lo = dyadic_lo(w[i], revealed[i]);
      ok = ok && point[i] >= lo && point[i] < lo + std::pow(2.0, -revealed[i]);
    }
    if (!ok) continue;
    sum += q(World(point));
    ++inside;
  }
  return sum / static_cast<double>(inside);
}

double bit_minimax(const Question& q, const World& w, std::vector<int>& revealed, int budget, int plies,
                   bool maximize, bool pass_allowed) {
  if (plies == 0) return grid_mean(q, w, revealed, budget);
  double best = maximize ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
  bool moved = false;
  auto consider = [&](double v) { best = maximize ? std::max(best, v) : std::min(best, v); };
  for (std::size_t i = 0; i < revealed.size(); ++i) {
    if (revealed[i] == budget) continue;
    moved = true;
    ++revealed[i];
    consider(bit_minimax(q, w, revealed, budget, plies - 1, !maximize, pass_allowed));
    --revealed[i];
  }
  if (pass_allowed || !moved) consider(bit_minimax(q, w, revealed, budget, plies - 1, !maximize, pass_allowed));
  return best;
}

Question wiggly(std::size_t dims) {
  std::vector<std::size_t> relevant;
  for (std::size_t i = 0; i < dims; ++i) relevant.push_back(i);
  return Question("wiggly", relevant, [dims](const World& w) {
    double s = 0.0;
    for (std::size_t i = 0; i < dims; ++i) s += (7.0 + 6.0 * i) * w[i] * w[i];
    return 0.5 + 0.5 * std::sin(s);
  });
}

}  // namespace

TEST_CASE("bit_of examples") {
  CHECK(bit_of(0.6, 1) == 1);
  CHECK(bit_of(0.6, 2) == 0);
  CHECK(bit_of(0.6, 3) == 0);
  CHECK(bit_of(0.6, 4) == 1);
  CHECK(bit_of(0.25, 1) == 0);
  CHECK(bit_of(0.25, 2) == 1);
  CHECK(bit_of(0.0, 5) == 0);
  CHECK(bit_of(1.0, 1) == 1);
  CHECK(bit_of(1.0, 9) == 1);
  CHECK_THROWS_AS(bit_of(0.5, 0), std::invalid_argument);
}

TEST_CASE("zoom examples") {
  const World w({0.6, 0.25});
  Cell c(2, 4);
  c = zoom(c, {FeatureIndex(0), 1, 1}, w);
  CHECK(c.lo(0) == 0.5);
  CHECK(c.hi(0) == 1.0);
  c = zoom(c, {FeatureIndex(0), 2, 0}, w);
  CHECK(c.lo(0) == 0.5);
  CHECK(c.hi(0) == 0.75);
  c = zoom(c, {FeatureIndex(1), 1, 0}, w);
  CHECK(c.lo(1) == 0.0);
  CHECK(c.hi(1) == 0.5);
  CHECK(c.contains(w));
  CHECK_FALSE(c.contains(World({0.8, 0.25})));

  const auto same = zoom(c, {FeatureIndex::pass(), 1, 0}, w);
  CHECK(same.revealed(0) == 2);
  CHECK(same.revealed(1) == 1);

  CHECK_THROWS_AS(zoom(Cell(2, 4), {FeatureIndex(0), 2, 0}, w), OutOfOrderBit);
  CHECK_THROWS_AS(zoom(Cell(2, 4), {FeatureIndex(0), 1, 0}, w), UntruthfulBit);
  CHECK_THROWS_AS(zoom(Cell(2, 4), {FeatureIndex(2), 1, 0}, w), IndexOutOfRange);
  Cell tight(1, 1);
  tight = zoom(tight, {FeatureIndex(0), 1, 1}, World({0.6}));
  CHECK_THROWS_AS(zoom(tight, {FeatureIndex(0), 2, 0}, World({0.6})), OutOfOrderBit);
}

TEST_CASE("cell_diameter examples") {
  const World w({0.6, 0.25});
  Cell c(2, 4);
  CHECK(cell_diameter(c) == doctest::Approx(0.75));
  c = zoom(c, {FeatureIndex(0), 1, 1}, w);
  CHECK(cell_diameter(c) == doctest::Approx(0.5));
  for (std::size_t d = 1; d <= 8; ++d) CHECK(cell_diameter(Cell(d, 3)) == doctest::Approx(1.0 - std::pow(2.0, -double(d))));
}

TEST_CASE("triangular_sequence and diameter bound") {
  CHECK(triangular_sequence(1) == std::vector<std::size_t>{0});
  CHECK(triangular_sequence(3) == std::vector<std::size_t>{0, 0, 1});
  CHECK(triangular_sequence(6) == std::vector<std::size_t>{0, 0, 1, 0, 1, 2});
  CHECK(triangular_sequence(4) == std::vector<std::size_t>{0, 0, 1, 0});
  CHECK_THROWS_AS(triangular_sequence(0), std::invalid_argument);

  CHECK(triangular_diameter_bound(1) == doctest::Approx(0.75));
  CHECK(triangular_diameter_bound(2) == doctest::Approx(0.5));
  CHECK(triangular_diameter_bound(3) == doctest::Approx(5.0 / 16.0));

  CHECK(lipschitz_error_bound(1.0, 1) == doctest::Approx(0.5));
  CHECK(lipschitz_error_bound(1.0, 4) == doctest::Approx(0.25));
  CHECK(lipschitz_error_bound(1.0, 8) == doctest::Approx(0.25));
  CHECK(lipschitz_error_bound(0.0, 3) == 0.0);
  CHECK_THROWS_AS(lipschitz_error_bound(-1.0, 3), std::invalid_argument);
}

TEST_CASE("property: triangular reveals shrink the cell below the bound") {
  oracle::Gen gen(16);
  for (int n = 1; n <= 5; ++n) {
    for (std::size_t dims = n; dims <= static_cast<std::size_t>(n) + 3; ++dims) {
      std::vector<double> v(dims);
      for (auto& x : v) x = gen.unit();
      const World w(v);
      Cell c(dims, 8);
      for (auto i : triangular_sequence(n * (n + 1) / 2)) {
        const int pos = c.revealed(i) + 1;
        c = zoom(c, {FeatureIndex(i), pos, bit_of(w[i], pos)}, w);
      }
      CHECK(c.contains(w));
      CHECK(cell_diameter(c) <= triangular_diameter_bound(n) + 1e-12);
    }
  }
}

TEST_CASE("solve_bit_debate examples") {
  SUBCASE("matches brute force on a one-feature linear question") {
    const auto q = questions::weighted_linear(1);
    for (double x : {0.1, 0.3, 0.6, 0.9}) {
      const World w({x});
      const auto r = solve_bit_debate({q, w, 1, 2});
      std::vector<int> revealed{0};
      CHECK(r.value_up_down == doctest::Approx(bit_minimax(q, w, revealed, 2, 2, true, true)).epsilon(1e-12));
      CHECK(r.value_down_up == doctest::Approx(bit_minimax(q, w, revealed, 2, 2, false, true)).epsilon(1e-12));
    }
  }
  SUBCASE("constant question") {
    const auto r = solve_bit_debate({questions::constant(0.3), World({0.2, 0.7}), 2, 3});
    CHECK(r.value_up_down == doctest::Approx(0.3));
    CHECK(r.value_down_up == doctest::Approx(0.3));
  }
  SUBCASE("two-feature linear question within the Lipschitz bound") {
    const auto q = questions::weighted_linear(2);
    const World w({0.6, 0.25});
    const BitDebateSpec spec{q, w, 3, 3};
    CHECK(bit_truth_promotion_bound(spec) <= lipschitz_error_bound(1.0, 3) + 1e-12);
  }
  CHECK_THROWS_AS(solve_bit_debate({questions::constant(0.3), World({0.2}), 0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(solve_bit_debate({questions::constant(0.3), World({0.2}), 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(solve_bit_debate({questions::weighted_linear(3), World({0.2}), 1, 2}), IndexOutOfRange);
}

TEST_CASE("property: solve_bit_debate matches brute-force bit minimax") {
  oracle::Gen gen(777);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t dims = 1 + gen.index(3);
    const int budget = 1 + gen.integer(0, 2);
    const int rounds = gen.integer(1, 2);
    const bool pass = gen.index(3) != 0;
    std::vector<double> v(dims);
    for (auto& x : v) x = gen.unit();
    const World w(v);
    const auto q = wiggly(dims);
    const auto r = solve_bit_debate({q, w, rounds, budget, pass});
    std::vector<int> revealed(dims, 0);
    const double up = bit_minimax(q, w, revealed, budget, 2 * rounds, true, pass);
    const double down = bit_minimax(q, w, revealed, budget, 2 * rounds, false, pass);
    CHECK(r.value_up_down == doctest::Approx(up).epsilon(1e-12));
    CHECK(r.value_down_up == doctest::Approx(down).epsilon(1e-12));
    CHECK(r.line_up_down.size() == static_cast<std::size_t>(2 * rounds));
  }
}

TEST_CASE("property: the Lipschitz bound holds for the weighted linear question") {
  oracle::Gen gen(31);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t dims = 2 + gen.index(2);
    const int rounds = gen.integer(1, 4);
    std::vector<double> v(dims);
    for (auto& x : v) x = gen.unit();
    const BitDebateSpec spec{questions::weighted_linear(dims), World(v), rounds, 4};
    CHECK(bit_truth_promotion_bound(spec) <= lipschitz_error_bound(1.0, rounds) + 1e-12);
  }
}

TEST_CASE("grid_point") {
  CHECK(grid_point(0, 1) == 0.25);
  CHECK(grid_point(1, 1) == 0.75);
  CHECK(grid_point(5, 3) == doctest::Approx(11.0 / 16.0));
}
