#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "kplanar/crossings.hpp"
#include "kplanar/drawing.hpp"

namespace kplanar::detail {

/// One straight piece of an edge route.
struct Segment {
  Point a, b;
  EdgeIndex edge = 0;
  /// Position within the route.
  std::size_t index = 0;
  /// Set when the endpoint is the route's first (last) point.
  std::optional<Vertex> a_vertex, b_vertex;

  double min_x() const { return std::min(a.x, b.x); }
  double max_x() const { return std::max(a.x, b.x); }
  double min_y() const { return std::min(a.y, b.y); }
  double max_y() const { return std::max(a.y, b.y); }
};

std::vector<Segment> collect_segments(const Drawing& d);

/// Throws Error{GeneralPositionViolation} when validation is requested and fails.
void require_general_position(const Drawing& d, const CountOptions& options);

}  // namespace kplanar::detail
