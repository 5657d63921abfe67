#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kplanar/drawing.hpp"

namespace kplanar {

enum class SegmentRelationKind {
  Disjoint,
  ProperCrossing,
  SharedEndpoint,
  EndpointOnInterior,
  CollinearOverlap,
};

struct SegmentRelation {
  SegmentRelationKind kind = SegmentRelationKind::Disjoint;
  /// Set only for ProperCrossing; rounded to double.
  std::optional<Point> point;
};

/// Exact classification of two closed segments a1a2 and b1b2.
/// Throws Error{DegenerateSegment} if either has zero length.
SegmentRelation segment_relation(Point a1, Point a2, Point b1, Point b2);

/// Unordered pair of edge indices, stored with first < second.
struct EdgePair {
  EdgeIndex first = 0;
  EdgeIndex second = 0;

  static EdgePair of(EdgeIndex a, EdgeIndex b) noexcept {
    return a < b ? EdgePair{a, b} : EdgePair{b, a};
  }
  friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

/// Proper crossings of one drawing, keyed by edge pair.
struct CrossingReport {
  /// Never holds a zero count.
  std::map<EdgePair, std::uint64_t> pair_counts;
  std::uint64_t total = 0;

  void add(EdgePair pair, std::uint64_t count = 1);
  bool empty() const noexcept { return total == 0; }

  friend bool operator==(const CrossingReport&, const CrossingReport&) = default;
};

/// "edge_a,edge_b,crossings" rows sorted by pair, then "TOTAL,,t".
std::string to_csv(const CrossingReport& report);

enum class ViolationKind {
  CoincidentVertices,
  CollinearOverlap,
  EndpointOnInterior,
  TouchingAtNonVertex,
  SelfIntersectingRoute,
  PassesNearVertex,
  ConcurrentCrossings,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  double tolerance = 0.0;
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// 1e-9 of the bounding-box diagonal (1e-9 for a zero-size box).
double default_tolerance(const Drawing& d) noexcept;

/// Checks the drawing against the general-position assumptions:
/// no overlapping or touching curves, simple routes, no curve through or
/// within `tol` of a non-incident vertex, and crossing points of distinct
/// segment pairs at least `tol` apart. Never throws.
ValidationReport validate_general_position(const Drawing& d, std::optional<double> tol = std::nullopt);

struct CountOptions {
  bool validate = true;
  std::optional<double> tolerance;
};

/// All segment pairs of distinct edges. Throws Error{GeneralPositionViolation}.
CrossingReport count_crossings_bruteforce(const Drawing& d, const CountOptions& options = {});

/// Bentley-Ottmann sweep with exact event coordinates; O((s + c) log s)
/// when validation is disabled. Without validation, exact contact
/// degeneracies met during the sweep still throw
/// Error{GeneralPositionViolation}.
CrossingReport count_crossings_sweep(const Drawing& d, const CountOptions& options = {});

}  // namespace kplanar
