#include <gtest/gtest.h>

#include <random>

#include "core/configuration.hpp"
#include "core/grid_io.hpp"
#include "core/rule.hpp"
#include "core/types.hpp"
#include "test_util.hpp"

using namespace fmca;

namespace {

Configuration with_minus(int n, std::initializer_list<Cell> minus) {
  Configuration x(n, State::kPlus);
  for (Cell c : minus) x.set_plus(c.i, c.j, false);
  return x;
}

// Direct transcription of the local rule, cell by cell.
Configuration naive_step(const Configuration& x, const LNeighborhood& nb) {
  const int n = x.n();
  Configuration y(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      std::vector<State> states;
      for (Offset d : offsets(nb))
        states.push_back(x.at({(i + d.di) % n, (j + d.dj) % n}));
      y.set({i, j}, local_rule(x.at({i, j}), states));
    }
  return y;
}

}  // namespace

TEST(Offsets, Toom) {
  const auto off = offsets(LNeighborhood::toom());
  ASSERT_EQ(off.size(), 2u);
  EXPECT_EQ(off[0], (Offset{0, 1}));
  EXPECT_EQ(off[1], (Offset{1, 0}));
}

TEST(Offsets, SevenCells) {
  EXPECT_EQ(offsets(LNeighborhood({1, 2, 3, 4}, {1, 2, 3})).size(), 7u);
}

TEST(Offsets, SparseExample) {
  const std::vector<Offset> want = {{0, 2}, {0, 4}, {0, 6}, {3, 0}, {6, 0}};
  EXPECT_EQ(offsets(LNeighborhood({2, 4, 6}, {3, 6})), want);
}

TEST(Neighborhood, RejectsBadSets) {
  EXPECT_FMCA_ERROR(LNeighborhood({}, {1}), ErrorCode::kInvalidArgument);
  EXPECT_FMCA_ERROR(LNeighborhood({0}, {1}), ErrorCode::kInvalidArgument);
  EXPECT_FMCA_ERROR(LNeighborhood({1, 1}, {1}), ErrorCode::kInvalidArgument);
}

TEST(Neighborhood, SortsAndThreshold) {
  const LNeighborhood nb({3, 1}, {2});
  EXPECT_EQ(nb.north(), (std::vector<int>{1, 3}));
  EXPECT_EQ(nb.threshold(), 2);
  EXPECT_EQ(nb.to_string(), "N=1,3 E=2");
  EXPECT_EQ(LNeighborhood({1, 2}, {1, 2}).threshold(), 3);
}

TEST(Neighborhood, CollisionsModN) {
  EXPECT_FMCA_ERROR(LNeighborhood({1, 5}, {1}).check_bindable(4), ErrorCode::kOffsetCollision);
  EXPECT_FMCA_ERROR(LNeighborhood({1}, {4}).check_bindable(4), ErrorCode::kOffsetCollision);
  EXPECT_NO_THROW(LNeighborhood({1, 5}, {1}).check_bindable(6));
}

TEST(LocalRule, Cases) {
  using S = State;
  EXPECT_EQ(local_rule(S::kPlus, {S::kMinus, S::kMinus}), S::kPlus);
  EXPECT_EQ(local_rule(S::kMinus, {S::kPlus, S::kPlus}), S::kPlus);
  EXPECT_EQ(local_rule(S::kMinus, {S::kPlus, S::kMinus}), S::kMinus);
}

TEST(Configuration, AccessorsAndBounds) {
  Configuration x(70);
  EXPECT_EQ(x.count_plus(), 0u);
  x.set({69, 3}, State::kPlus);
  EXPECT_TRUE(x.plus(69, 3));
  EXPECT_EQ(x.at({69, 3}), State::kPlus);
  EXPECT_EQ(x.count_plus(), 1u);
  EXPECT_FMCA_ERROR(x.at({70, 0}), ErrorCode::kCellOutOfRange);
  EXPECT_FMCA_ERROR(x.set({0, -1}, State::kPlus), ErrorCode::kCellOutOfRange);
}

TEST(Configuration, RandomIsSeeded) {
  EXPECT_EQ(Configuration::random(33, 5), Configuration::random(33, 5));
  EXPECT_FALSE(Configuration::random(33, 5) == Configuration::random(33, 6));
  EXPECT_EQ(Configuration::random(20, 1, 0.0).count_plus(), 0u);
  EXPECT_EQ(Configuration::random(20, 1, 1.0).count_plus(), 400u);
}

TEST(GridIo, RoundTripAndOrientation) {
  Configuration x(3);
  x.set_plus(0, 2, true);  // north-west corner: first row, first column
  x.set_plus(2, 0, true);
  const std::string text = format_grid(x);
  EXPECT_EQ(text, "3\n+--\n---\n--+\n");
  EXPECT_EQ(parse_grid(text), x);
}

TEST(GridIo, ParseErrorsCarryLine) {
  try {
    parse_grid("3\n+--\n-x-\n---\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_FMCA_ERROR(parse_grid("2\n++\n"), ErrorCode::kParseError);
  EXPECT_FMCA_ERROR(parse_grid("0\n"), ErrorCode::kParseError);
  EXPECT_FMCA_ERROR(parse_grid("2\n+++\n--\n"), ErrorCode::kParseError);
  EXPECT_FMCA_ERROR(read_grid_file("/nonexistent/grid.txt"), ErrorCode::kIo);
}

TEST(Step, TrivialGrids) {
  const auto nb = LNeighborhood::toom();
  EXPECT_EQ(step(Configuration(5), nb), Configuration(5));
  EXPECT_EQ(step(Configuration(5, State::kPlus), nb), Configuration(5, State::kPlus));
  EXPECT_EQ(step(with_minus(4, {{0, 0}}), nb), Configuration(4, State::kPlus));
}

TEST(Step, MatchesNaiveRule) {
  const std::vector<LNeighborhood> nbs = {LNeighborhood::toom(), LNeighborhood({1, 2}, {1, 3}),
                                          LNeighborhood({2, 4, 6}, {3, 6}),
                                          LNeighborhood({1, 2, 3, 4}, {1, 2, 3})};
  for (int n : {7, 13, 64, 65, 130})
    for (const auto& nb : nbs) {
      if (n <= nb.max_north() || n <= nb.max_east()) continue;
      const Configuration x = Configuration::random(n, n * 31 + nb.size(), 0.45);
      EXPECT_EQ(step(x, nb), naive_step(x, nb)) << "n=" << n << " " << nb.to_string();
    }
}

TEST(Step, ThreadCountDoesNotMatter) {
  const auto nb = LNeighborhood({1, 3}, {2, 5});
  const Configuration x = Configuration::random(200, 9, 0.3);
  const auto one = run_to_fixed_point(x, nb, 1);
  const auto four = run_to_fixed_point(x, nb, 4);
  EXPECT_EQ(one.config, four.config);
  EXPECT_EQ(one.steps, four.steps);
  EXPECT_EQ(simulate(x, nb, 7, 1), simulate(x, nb, 7, 3));
}

TEST(Simulate, ZeroStepsIsIdentity) {
  const Configuration x = Configuration::random(10, 3);
  EXPECT_EQ(simulate(x, LNeighborhood::toom(), 0), x);
}

TEST(Simulate, MinusRowIsFrozen) {
  Configuration x(4, State::kPlus);
  for (int i = 0; i < 4; ++i) x.set_plus(i, 2, false);
  for (uint64_t t = 0; t <= 16; ++t) EXPECT_EQ(simulate(x, LNeighborhood::toom(), t), x);
}

TEST(FixedPoint, TrivialAndBound) {
  const auto nb = LNeighborhood::toom();
  const auto plus = run_to_fixed_point(Configuration(6, State::kPlus), nb);
  EXPECT_EQ(plus.steps, 0u);
  const auto minus = run_to_fixed_point(Configuration(6), nb);
  EXPECT_EQ(minus.steps, 0u);
  EXPECT_EQ(minus.config, Configuration(6));
  const auto r = run_to_fixed_point(Configuration::random(8, 7), nb);
  EXPECT_LE(r.steps, 64u);
  EXPECT_EQ(step(r.config, nb), r.config);
}

TEST(PredictBySimulation, Basics) {
  const auto nb = LNeighborhood::toom();
  const Configuration x = with_minus(4, {{1, 1}});
  EXPECT_FALSE(predict_by_simulation(x, nb, 5, {0, 0}));
  EXPECT_FALSE(predict_by_simulation(x, nb, 0, {1, 1}));
  EXPECT_TRUE(predict_by_simulation(x, nb, 1, {1, 1}));
}

TEST(FlipSteps, AgreeWithSimulation) {
  const auto nb = LNeighborhood({1}, {2});
  const Configuration x = Configuration::random(16, 4, 0.4);
  const auto times = simulate_flip_steps(x, nb);
  const auto fp = run_to_fixed_point(x, nb).config;
  for (int j = 0; j < 16; ++j)
    for (int i = 0; i < 16; ++i) {
      const int64_t t = times[j * 16 + i];
      if (x.plus(i, j)) {
        EXPECT_EQ(t, 0);
      } else if (!fp.plus(i, j)) {
        EXPECT_EQ(t, -1);
      } else {
        EXPECT_FALSE(simulate(x, nb, t - 1).plus(i, j));
        EXPECT_TRUE(simulate(x, nb, t).plus(i, j));
      }
    }
}

// Freezing, monotonicity of the rule and shift equivariance on random pairs.
TEST(RuleProperties, RandomPairs) {
  std::mt19937_64 rng(2024);
  const std::vector<LNeighborhood> nbs = {LNeighborhood::toom(), LNeighborhood({1, 2}, {2}),
                                          LNeighborhood({2, 3}, {1, 4})};
  for (int k = 0; k < 150; ++k) {
    const int n = 6 + static_cast<int>(rng() % 20);
    const auto& nb = nbs[k % nbs.size()];
    const Configuration x = Configuration::random(n, rng(), 0.4);
    Configuration y = x;
    for (int e = 0; e < n; ++e) y.set_plus(rng() % n, rng() % n, true);
    const Configuration sx = step(x, nb), sy = step(y, nb);
    EXPECT_TRUE(x.leq(sx));
    EXPECT_TRUE(sx.leq(sy));
    const Offset d{static_cast<int>(rng() % n), static_cast<int>(rng() % n)};
    EXPECT_EQ(step(x.shifted(d), nb), sx.shifted(d));
  }
}
