#include <gtest/gtest.h>

#include "kplanar/crossings.hpp"
#include "kplanar/decompose.hpp"
#include "kplanar/error.hpp"
#include "kplanar/oracles.hpp"
#include "test_support.hpp"

namespace kplanar {
namespace {

TEST(Oracle, PathHasNothingToCount) {
  Drawing d = circular_drawing(build_graph(3, {{0, 1}, {1, 2}}));
  oracle::EnumerationResult r = oracle::enumerate_expectation(d, 2);
  EXPECT_EQ(r.mean, Rational(0));
  EXPECT_EQ(r.minimum, 0u);
  EXPECT_EQ(r.maximum, 0u);
}

TEST(Oracle, Fixture) {
  oracle::EnumerationResult r = oracle::enumerate_expectation(k5_one_crossing_drawing(), 2);
  EXPECT_EQ(to_string(r.mean), "3/8");
  EXPECT_EQ(r.minimum, 0u);
  EXPECT_EQ(r.maximum, 1u);
  EXPECT_EQ(r.k, 2u);
  EXPECT_EQ(r.n, 5u);
  // Vertex 0 is the fastest digit: 10000 is the first zero-crossing labeling.
  EXPECT_EQ(r.argmin, VertexLabeling(2, {1, 0, 0, 0, 0}));
}

TEST(Oracle, CircularK5) {
  oracle::EnumerationResult r = oracle::enumerate_expectation(circular_drawing(complete_graph(5)), 2);
  EXPECT_EQ(to_string(r.mean), "15/8");
  EXPECT_EQ(r.maximum, 5u);
}

TEST(Oracle, PairProbability) {
  for (std::int64_t k = 1; k <= 8; ++k) {
    EXPECT_EQ(oracle::enumerate_pair_probability(k, PairPattern::DisjointPair),
              make_rational(2, k * k) - make_rational(1, k * k * k));
    EXPECT_EQ(oracle::enumerate_pair_probability(k, PairPattern::SharedVertex), make_rational(1, k));
    EXPECT_EQ(oracle::enumerate_pair_probability(k, PairPattern::SameEdge), Rational(1));
  }
  EXPECT_EQ(to_string(oracle::enumerate_pair_probability(2, PairPattern::DisjointPair)), "3/8");
}

TEST(Oracle, Limits) {
  Drawing d = circular_drawing(complete_graph(12));
  try {
    oracle::enumerate_expectation(d, 3, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EnumerationTooLarge);
  }
  try {
    oracle::enumerate_pair_probability(65, PairPattern::DisjointPair);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidK);
  }
  try {
    oracle::enumerate_expectation(d, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidK);
  }
}

TEST(OracleProperty, MeanEqualsClosedForm) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::uint32_t k = 1 + seed % 3;
    const std::size_t n = 4 + seed % 7;
    Graph g = testing::capped_gnm(n, std::min<std::size_t>(pair_count(n), 6 + seed % 10), seed);
    Drawing d = seed % 2 ? random_drawing(g, seed) : testing::random_polyline_drawing(g, seed, 2);
    CrossingReport r = count_crossings_sweep(d);
    EXPECT_EQ(oracle::enumerate_expectation(r, g, k).mean, expected_monochromatic_crossings(r, g, k)) << seed;
  }
}

TEST(OracleProperty, MinimumBelowDerandomizedBelowExpectation) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::uint32_t k = 2 + seed % 2;
    Drawing d = random_drawing(testing::capped_gnm(8, 16, seed), seed);
    CrossingReport r = count_crossings_sweep(d);
    const std::uint64_t minimum = oracle::exhaustive_minimum(r, d.graph(), k).minimum;
    const std::uint64_t derand = realized_crossings(r, d.graph(), derandomize(r, d.graph(), k));
    EXPECT_LE(minimum, derand);
    EXPECT_LE(Rational(derand), expected_monochromatic_crossings(r, d.graph(), k));
  }
}

TEST(OracleProperty, MinimumNonIncreasingInK) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Drawing d = random_drawing(testing::capped_gnm(7, 14, seed), seed);
    CrossingReport r = count_crossings_sweep(d);
    std::uint64_t previous = r.total;
    for (std::uint32_t k = 1; k <= 4; ++k) {
      oracle::MinimumResult m = oracle::exhaustive_minimum(r, d.graph(), k);
      EXPECT_LE(m.minimum, previous) << seed << " k=" << k;
      EXPECT_EQ(realized_crossings(r, d.graph(), m.labeling), m.minimum);
      previous = m.minimum;
    }
  }
}

}  // namespace
}  // namespace kplanar
