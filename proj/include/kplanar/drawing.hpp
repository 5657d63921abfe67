#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kplanar/graph.hpp"

namespace kplanar {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }

/// Axis-aligned box.
struct Box {
  Point min{0.0, 0.0};
  Point max{1.0, 1.0};

  double width() const noexcept { return max.x - min.x; }
  double height() const noexcept { return max.y - min.y; }
  double diagonal() const noexcept;
  void extend(Point p) noexcept;
  static Box empty() noexcept;
};

using Route = std::vector<Point>;

/// A graph together with one point per vertex and one polyline per edge.
///
/// Structural invariants (checked on construction): every route has at
/// least two points, starts at the position of its edge's first endpoint
/// and ends at the second, all coordinates are finite, and no route has a
/// zero-length segment. General position is a separate check (see
/// crossings.hpp).
class Drawing {
 public:
  /// Throws Error{InvalidDrawing}.
  Drawing(Graph graph, std::vector<Point> positions, std::vector<Route> routes);

  /// Straight-line drawing: every route is the segment between its endpoints.
  static Drawing straight_line(Graph graph, std::vector<Point> positions);

  const Graph& graph() const noexcept { return graph_; }
  std::span<const Point> positions() const noexcept { return positions_; }
  const Point& position(Vertex v) const { return positions_.at(v); }
  std::span<const Route> routes() const noexcept { return routes_; }
  const Route& route(EdgeIndex e) const { return routes_.at(e); }

  bool is_straight_line() const noexcept;
  std::size_t segment_count() const noexcept;
  Box bounding_box() const noexcept;

  /// Every point moved by `offset`.
  Drawing translated(Point offset) const;

  friend bool operator==(const Drawing&, const Drawing&) = default;

 private:
  Graph graph_;
  std::vector<Point> positions_;
  std::vector<Route> routes_;
};

/// Vertices on the unit circle in index order, straight-line edges.
Drawing circular_drawing(const Graph& g);

/// Like circular_drawing, but vertex order[j] takes the j-th slot.
Drawing convex_drawing(const Graph& g, std::span<const Vertex> order);

struct RandomDrawingOptions {
  Box box{};
  int max_retries = 1000;
  std::optional<double> tolerance;
};

/// Uniform vertex positions in the box, resampled until the drawing is in
/// general position. Throws Error{ValidationRetryLimitExceeded}.
Drawing random_drawing(const Graph& g, std::uint64_t seed, const RandomDrawingOptions& options = {});

/// K5 drawn with exactly one crossing: four vertices on a square, one
/// inside, one square diagonal routed around the outside as a polyline.
Drawing k5_one_crossing_drawing();

}  // namespace kplanar
