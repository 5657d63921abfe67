#include <gtest/gtest.h>

#include "kplanar/crossings.hpp"
#include "kplanar/error.hpp"
#include "test_support.hpp"

namespace kplanar {
namespace {

TEST(Sweep, CircularK6) {
  CrossingReport sweep = count_crossings_sweep(circular_drawing(complete_graph(6)));
  EXPECT_EQ(sweep.total, 15u);
  EXPECT_EQ(sweep, count_crossings_bruteforce(circular_drawing(complete_graph(6))));
}

TEST(Sweep, NoCrossingsGivesEmptyReport) {
  Drawing path = circular_drawing(build_graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_TRUE(count_crossings_sweep(path).pair_counts.empty());
  EXPECT_TRUE(count_crossings_sweep(circular_drawing(build_graph(1, {}))).empty());
  EXPECT_TRUE(count_crossings_sweep(Drawing::straight_line(build_graph(0, {}), {})).empty());
}

TEST(Sweep, ConvexCompleteGraphs) {
  for (std::size_t n = 4; n <= 14; ++n) {
    const std::uint64_t quadruples = n * (n - 1) * (n - 2) * (n - 3) / 24;
    EXPECT_EQ(count_crossings_sweep(circular_drawing(complete_graph(n))).total, quadruples) << n;
  }
}

TEST(Sweep, Fixture) { EXPECT_EQ(count_crossings_sweep(k5_one_crossing_drawing()), count_crossings_bruteforce(k5_one_crossing_drawing())); }

TEST(Sweep, VerticalAndHorizontalSegments) {
  // A # shape: two verticals, two horizontals, four crossings; plus a
  // vertical edge sharing an endpoint with a horizontal one.
  Graph g = build_graph(9, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {7, 8}});
  Drawing d = Drawing::straight_line(
      g, {{1, 0}, {1, 3}, {2, 0}, {2, 3}, {0, 1}, {3, 1}, {0, 2}, {3, 2}, {3, 5}});
  CrossingReport sweep = count_crossings_sweep(d);
  EXPECT_EQ(sweep.total, 4u);
  EXPECT_EQ(sweep, count_crossings_bruteforce(d));
}

TEST(Sweep, CrossingOnVerticalAboveOtherEvents) {
  // Several segments crossing one vertical at distinct heights.
  Graph g = build_graph(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  Drawing d = Drawing::straight_line(g, {{0, -5}, {0, 5}, {-1, -4}, {1, 3}, {-1, 1}, {2, -2}, {-2, 4}, {1, 4.5}});
  EXPECT_EQ(count_crossings_sweep(d), count_crossings_bruteforce(d));
}

TEST(Sweep, MatchesBruteForceOnRandomStraightLine) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Graph g = testing::capped_gnm(6 + seed % 20, 5 + seed % 40, seed);
    Drawing d = random_drawing(g, seed);
    ASSERT_EQ(count_crossings_sweep(d), count_crossings_bruteforce(d)) << seed;
  }
}

TEST(Sweep, MatchesBruteForceOnPolylines) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = testing::capped_gnm(5 + seed % 10, 4 + seed % 15, seed);
    Drawing d = testing::random_polyline_drawing(g, seed, 3);
    ASSERT_EQ(count_crossings_sweep(d), count_crossings_bruteforce(d)) << seed;
  }
}

TEST(Sweep, MatchesBruteForceOnIntegerGrids) {
  // Shared x-coordinates, vertical edges and rational crossing points
  // that coincide in x with other events.
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Graph g = testing::capped_gnm(6 + seed % 8, 6 + seed % 12, seed);
    Drawing d = testing::random_grid_drawing(g, seed, 6);
    ASSERT_EQ(count_crossings_sweep(d), count_crossings_bruteforce(d)) << seed;
  }
}

TEST(Sweep, UnvalidatedDegeneraciesThrow) {
  auto code = [](const Drawing& d) {
    try {
      count_crossings_sweep(d, {.validate = false});
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  Graph two = build_graph(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(code(Drawing::straight_line(two, {{0, 0}, {2, 0}, {1, 0}, {3, 0}})), ErrorCode::GeneralPositionViolation);
  EXPECT_EQ(code(Drawing::straight_line(two, {{0, 0}, {2, 0}, {1, 0}, {1, 3}})), ErrorCode::GeneralPositionViolation);
  EXPECT_EQ(code(Drawing(two, {{0, 0}, {2, 0}, {0, 2}, {2, 2}}, {{{0, 0}, {1, 1}, {2, 0}}, {{0, 2}, {1, 1}, {2, 2}}})),
            ErrorCode::GeneralPositionViolation);
}

TEST(Sweep, UnvalidatedTriplePointCountsEveryPair) {
  Graph g = build_graph(6, {{0, 1}, {2, 3}, {4, 5}});
  Drawing d = Drawing::straight_line(g, {{-1, 0}, {1, 0}, {0, -1}, {0, 1}, {-1, -1}, {1, 1}});
  EXPECT_EQ(count_crossings_sweep(d, {.validate = false}), count_crossings_bruteforce(d, {.validate = false}));
}

}  // namespace
}  // namespace kplanar
