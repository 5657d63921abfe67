#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <gmpxx.h>

#include "kplanar/crossings.hpp"
#include "kplanar/error.hpp"
#include "kplanar/predicates.hpp"
#include "test_support.hpp"

namespace kplanar {
namespace {

using Kind = SegmentRelationKind;

int rational_orientation(Point a, Point b, Point c) {
  mpq_class det = (mpq_class(a.x) - c.x) * (mpq_class(b.y) - c.y) - (mpq_class(a.y) - c.y) * (mpq_class(b.x) - c.x);
  return sgn(det);
}

TEST(Orientation, Basic) {
  EXPECT_EQ(orientation({0, 0}, {1, 0}, {0, 1}), 1);
  EXPECT_EQ(orientation({0, 0}, {0, 1}, {1, 0}), -1);
  EXPECT_EQ(orientation({0, 0}, {1, 1}, {2, 2}), 0);
  EXPECT_EQ(orientation({0, 0}, {0, 0}, {0, 0}), 0);
}

TEST(Orientation, ExactNearDegenerate) {
  // A 256x256 grid of points one ulp apart next to the line through
  // (12,12) and (24,24); naive double evaluation misclassifies many.
  const double ulp = std::ldexp(1.0, -53);
  const Point b{12.0, 12.0};
  const Point c{24.0, 24.0};
  int disagreements_with_naive = 0;
  for (int i = 0; i < 256; ++i) {
    for (int j = 0; j < 256; ++j) {
      const Point a{0.5 + i * ulp, 0.5 + j * ulp};
      const int expected = rational_orientation(a, b, c);
      ASSERT_EQ(orientation(a, b, c), expected) << i << ' ' << j;
      const double naive = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
      disagreements_with_naive += ((naive > 0) - (naive < 0)) != expected;
    }
  }
  EXPECT_GT(disagreements_with_naive, 0);
}

TEST(SegmentRelation, Examples) {
  SegmentRelation x = segment_relation({0, 0}, {2, 2}, {0, 2}, {2, 0});
  EXPECT_EQ(x.kind, Kind::ProperCrossing);
  ASSERT_TRUE(x.point);
  EXPECT_EQ(*x.point, (Point{1, 1}));
  EXPECT_EQ(segment_relation({0, 0}, {1, 0}, {1, 0}, {2, 1}).kind, Kind::SharedEndpoint);
  EXPECT_EQ(segment_relation({0, 0}, {2, 0}, {1, 0}, {3, 0}).kind, Kind::CollinearOverlap);
}

TEST(SegmentRelation, OtherCases) {
  EXPECT_EQ(segment_relation({0, 0}, {1, 0}, {0, 1}, {1, 1}).kind, Kind::Disjoint);
  EXPECT_EQ(segment_relation({0, 0}, {1, 0}, {2, 0}, {3, 0}).kind, Kind::Disjoint);     // collinear, apart
  EXPECT_EQ(segment_relation({0, 0}, {1, 0}, {1, 0}, {3, 0}).kind, Kind::SharedEndpoint);  // collinear, touching
  EXPECT_EQ(segment_relation({0, 0}, {2, 0}, {1, 0}, {1, 5}).kind, Kind::EndpointOnInterior);
  EXPECT_EQ(segment_relation({0, 0}, {2, 0}, {1, -1}, {1, 5}).kind, Kind::ProperCrossing);
  EXPECT_EQ(segment_relation({0, 0}, {4, 0}, {1, 0}, {2, 0}).kind, Kind::CollinearOverlap);  // contained
  EXPECT_EQ(segment_relation({0, 0}, {1, 1}, {2, 2}, {3, 0}).kind, Kind::Disjoint);  // lines meet outside
}

TEST(SegmentRelation, Degenerate) {
  try {
    segment_relation({0, 0}, {0, 0}, {0, 1}, {1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateSegment);
  }
}

TEST(SegmentRelation, SymmetricKind) {
  // Small grid coordinates hit every relation kind.
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(0, 4);
  int seen[5] = {};
  for (int i = 0; i < 20000; ++i) {
    Point a1{double(c(rng)), double(c(rng))}, a2{double(c(rng)), double(c(rng))};
    Point b1{double(c(rng)), double(c(rng))}, b2{double(c(rng)), double(c(rng))};
    if (a1 == a2 || b1 == b2) continue;
    const Kind ab = segment_relation(a1, a2, b1, b2).kind;
    EXPECT_EQ(ab, segment_relation(b1, b2, a1, a2).kind);
    EXPECT_EQ(ab, segment_relation(a2, a1, b2, b1).kind);
    ++seen[static_cast<int>(ab)];
  }
  for (int kind = 0; kind < 5; ++kind) EXPECT_GT(seen[kind], 0) << kind;
}

TEST(SegmentRelation, CrossingPointInsideBoth) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> c(-1, 1);
  for (int i = 0; i < 5000; ++i) {
    Point a1{c(rng), c(rng)}, a2{c(rng), c(rng)}, b1{c(rng), c(rng)}, b2{c(rng), c(rng)};
    SegmentRelation r = segment_relation(a1, a2, b1, b2);
    if (r.kind != Kind::ProperCrossing) continue;
    const Point p = *r.point;
    EXPECT_GE(p.x, std::min({a1.x, a2.x}) - 1e-12);
    EXPECT_LE(p.x, std::max({a1.x, a2.x}) + 1e-12);
    EXPECT_GE(p.y, std::min({b1.y, b2.y}) - 1e-12);
    EXPECT_LE(p.y, std::max({b1.y, b2.y}) + 1e-12);
  }
}

bool has_violation(const ValidationReport& r, ViolationKind kind) {
  for (const Violation& v : r.violations)
    if (v.kind == kind) return true;
  return false;
}

TEST(Validation, CircularK4Passes) { EXPECT_TRUE(validate_general_position(circular_drawing(complete_graph(4))).ok()); }

TEST(Validation, ThreeEdgesThroughOnePoint) {
  Graph g = build_graph(6, {{0, 1}, {2, 3}, {4, 5}});
  Drawing d = Drawing::straight_line(g, {{-1, 0}, {1, 0}, {0, -1}, {0, 1}, {-1, -1}, {1, 1}});
  ValidationReport r = validate_general_position(d);
  EXPECT_TRUE(has_violation(r, ViolationKind::ConcurrentCrossings));
}

TEST(Validation, NearlyConcurrentWithinTolerance) {
  Graph g = build_graph(6, {{0, 1}, {2, 3}, {4, 5}});
  Drawing d = Drawing::straight_line(g, {{-1, 0}, {1, 0}, {1e-12, -1}, {1e-12, 1}, {-1, -1}, {1, 1}});
  EXPECT_FALSE(validate_general_position(d).ok());
  EXPECT_TRUE(validate_general_position(d, 1e-14).ok());
}

TEST(Validation, EdgeThroughVertex) {
  Graph g = build_graph(3, {{0, 2}});
  Drawing d = Drawing::straight_line(g, {{0, 0}, {1, 1}, {2, 2}});
  EXPECT_TRUE(has_violation(validate_general_position(d), ViolationKind::PassesNearVertex));
}

TEST(Validation, EdgeNearVertex) {
  Graph g = build_graph(3, {{0, 2}});
  Drawing d = Drawing::straight_line(g, {{0, 0}, {1, 1 + 1e-12}, {2, 2}});
  EXPECT_TRUE(has_violation(validate_general_position(d), ViolationKind::PassesNearVertex));
}

TEST(Validation, CollinearOverlap) {
  Graph g = build_graph(4, {{0, 1}, {2, 3}});
  Drawing d = Drawing::straight_line(g, {{0, 0}, {2, 0}, {1, 0}, {3, 0}});
  EXPECT_TRUE(has_violation(validate_general_position(d), ViolationKind::CollinearOverlap));
}

TEST(Validation, TouchingAtBend) {
  Graph g = build_graph(4, {{0, 1}, {2, 3}});
  Drawing d(g, {{0, 0}, {2, 0}, {0, 2}, {2, 2}}, {{{0, 0}, {1, 1}, {2, 0}}, {{0, 2}, {1, 1}, {2, 2}}});
  EXPECT_TRUE(has_violation(validate_general_position(d), ViolationKind::TouchingAtNonVertex));
}

TEST(Validation, EndpointOnInterior) {
  Graph g = build_graph(4, {{0, 1}, {2, 3}});
  Drawing d(g, {{0, 0}, {2, 0}, {0, 2}, {2, 2}}, {{{0, 0}, {1, 0.5}, {2, 0}}, {{0, 2}, {0.5, 0.25}, {2, 2}}});
  EXPECT_TRUE(has_violation(validate_general_position(d), ViolationKind::EndpointOnInterior));
}

TEST(Validation, SelfIntersectingRoute) {
  Graph g = build_graph(2, {{0, 1}});
  Drawing d(g, {{0, 0}, {2, 0}}, {{{0, 0}, {1, 1}, {1, -1}, {0.5, 1}, {2, 0}}});
  EXPECT_TRUE(has_violation(validate_general_position(d), ViolationKind::SelfIntersectingRoute));
  Drawing backtrack(g, {{0, 0}, {2, 0}}, {{{0, 0}, {1, 1}, {0.5, 0.5}, {2, 0}}});
  EXPECT_TRUE(has_violation(validate_general_position(backtrack), ViolationKind::SelfIntersectingRoute));
}

TEST(Validation, CoincidentIsolatedVertices) {
  Graph g = build_graph(3, {});
  Drawing d = Drawing::straight_line(g, {{0, 0}, {1, 1}, {1, 1}});
  EXPECT_TRUE(has_violation(validate_general_position(d), ViolationKind::CoincidentVertices));
}

TEST(Validation, AdjacentEdgesAreFine) {
  Drawing d = Drawing::straight_line(build_graph(4, {{0, 1}, {0, 2}, {0, 3}}), {{0, 0}, {1, 0}, {0, 1}, {-1, -1}});
  EXPECT_TRUE(validate_general_position(d).ok());
}

TEST(Validation, DefaultToleranceScalesWithDrawing) {
  Drawing d = Drawing::straight_line(build_graph(2, {{0, 1}}), {{0, 0}, {3e6, 4e6}});
  EXPECT_DOUBLE_EQ(default_tolerance(d), 5e-3);
  EXPECT_DOUBLE_EQ(validate_general_position(d).tolerance, 5e-3);
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(count_crossings_bruteforce(circular_drawing(complete_graph(4))).total, 1u);
  EXPECT_EQ(count_crossings_bruteforce(circular_drawing(complete_graph(5))).total, 5u);
  EXPECT_EQ(count_crossings_bruteforce(k5_one_crossing_drawing()).total, 1u);
}

TEST(BruteForce, RejectsInvalidDrawing) {
  Graph g = build_graph(6, {{0, 1}, {2, 3}, {4, 5}});
  Drawing d = Drawing::straight_line(g, {{-1, 0}, {1, 0}, {0, -1}, {0, 1}, {-1, -1}, {1, 1}});
  try {
    count_crossings_bruteforce(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GeneralPositionViolation);
  }
  // Without validation every pair of the triple point counts.
  EXPECT_EQ(count_crossings_bruteforce(d, {.validate = false}).total, 3u);
}

TEST(BruteForce, PolylinePairCrossingTwice) {
  Graph g = build_graph(4, {{0, 1}, {2, 3}});
  Drawing d(g, {{0, 0}, {4, 0}, {1, -1}, {3, -1}}, {{{0, 0}, {4, 0}}, {{1, -1}, {2, 1}, {3, -1}}});
  CrossingReport r = count_crossings_bruteforce(d);
  EXPECT_EQ(r.total, 2u);
  EXPECT_EQ(r.pair_counts.at(EdgePair{0, 1}), 2u);
}

TEST(CrossingReport, CsvFormat) {
  CrossingReport r;
  r.add(EdgePair::of(4, 1), 2);
  r.add(EdgePair::of(0, 3));
  r.add(EdgePair::of(0, 2), 0);
  EXPECT_EQ(to_csv(r), "edge_a,edge_b,crossings\n0,3,1\n1,4,2\nTOTAL,,3\n");
  EXPECT_EQ(r.pair_counts.size(), 2u);
}

TEST(CrossingReport, TranslationInvariant) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    // Integer coordinates and offsets: the translated drawing is exact.
    Drawing d = testing::random_grid_drawing(gnm_random(10, 18, seed), seed, 40);
    Drawing moved = d.translated({1000.0, -77.0});
    EXPECT_EQ(count_crossings_bruteforce(d), count_crossings_bruteforce(moved));
    // Generic coordinates pick up rounding but stay far from degenerate.
    Drawing p = testing::random_polyline_drawing(gnm_random(10, 18, seed), seed, 1);
    EXPECT_EQ(count_crossings_bruteforce(p), count_crossings_bruteforce(p.translated({3.25, -1.5})));
  }
}

}  // namespace
}  // namespace kplanar
