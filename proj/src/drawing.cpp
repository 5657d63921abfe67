#include "kplanar/drawing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "kplanar/crossings.hpp"
#include "kplanar/error.hpp"

namespace kplanar {

double Box::diagonal() const noexcept { return std::hypot(width(), height()); }

void Box::extend(Point p) noexcept {
  min.x = std::min(min.x, p.x);
  min.y = std::min(min.y, p.y);
  max.x = std::max(max.x, p.x);
  max.y = std::max(max.y, p.y);
}

Box Box::empty() noexcept {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return Box{{inf, inf}, {-inf, -inf}};
}

Drawing::Drawing(Graph graph, std::vector<Point> positions, std::vector<Route> routes)
    : graph_(std::move(graph)), positions_(std::move(positions)), routes_(std::move(routes)) {
  if (positions_.size() != graph_.vertex_count())
    throw Error(ErrorCode::InvalidDrawing, "expected " + std::to_string(graph_.vertex_count()) + " positions, got " +
                                               std::to_string(positions_.size()));
  if (routes_.size() != graph_.edge_count())
    throw Error(ErrorCode::InvalidDrawing,
                "expected " + std::to_string(graph_.edge_count()) + " routes, got " + std::to_string(routes_.size()));
  for (const Point& p : positions_)
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw Error(ErrorCode::InvalidDrawing, "non-finite vertex position");
  for (EdgeIndex e = 0; e < routes_.size(); ++e) {
    const Route& r = routes_[e];
    const Edge& edge = graph_.edge(e);
    const std::string name = "edge " + std::to_string(e);
    if (r.size() < 2) throw Error(ErrorCode::InvalidDrawing, name + " has fewer than 2 route points");
    if (r.front() != positions_[edge.u] || r.back() != positions_[edge.v])
      throw Error(ErrorCode::InvalidDrawing, name + " route does not join its endpoints");
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (!std::isfinite(r[j].x) || !std::isfinite(r[j].y))
        throw Error(ErrorCode::InvalidDrawing, name + " has a non-finite route point");
      if (j > 0 && r[j] == r[j - 1]) throw Error(ErrorCode::InvalidDrawing, name + " has a zero-length segment");
    }
  }
}

Drawing Drawing::straight_line(Graph graph, std::vector<Point> positions) {
  std::vector<Route> routes;
  routes.reserve(graph.edge_count());
  for (const Edge& e : graph.edges()) {
    if (e.u >= positions.size() || e.v >= positions.size()) break;  // constructor reports the size mismatch
    routes.push_back({positions[e.u], positions[e.v]});
  }
  return Drawing(std::move(graph), std::move(positions), std::move(routes));
}

bool Drawing::is_straight_line() const noexcept {
  return std::all_of(routes_.begin(), routes_.end(), [](const Route& r) { return r.size() == 2; });
}

std::size_t Drawing::segment_count() const noexcept {
  std::size_t s = 0;
  for (const Route& r : routes_) s += r.size() - 1;
  return s;
}

Box Drawing::bounding_box() const noexcept {
  Box box = Box::empty();
  for (const Point& p : positions_) box.extend(p);
  for (const Route& r : routes_)
    for (const Point& p : r) box.extend(p);
  if (positions_.empty()) return Box{{0.0, 0.0}, {0.0, 0.0}};
  return box;
}

Drawing Drawing::translated(Point offset) const {
  std::vector<Point> positions(positions_);
  for (Point& p : positions) p = p + offset;
  std::vector<Route> routes(routes_);
  for (Route& r : routes)
    for (Point& p : r) p = p + offset;
  return Drawing(graph_, std::move(positions), std::move(routes));
}

Drawing convex_drawing(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.vertex_count();
  if (order.size() != n) throw Error(ErrorCode::InvalidDrawing, "vertex order has wrong length");
  // Slot j sits at angle 2*pi*(j + jitter_j)/n. The jitter keeps slots in
  // order but breaks the concurrent diagonals of a regular polygon.
  std::vector<Point> positions(n);
  for (std::size_t j = 0; j < n; ++j) {
    double frac = std::fmod(static_cast<double>(j) * std::numbers::phi, 1.0);
    double jitter = 0.2 * (frac - 0.5);
    double angle = 2.0 * std::numbers::pi * (static_cast<double>(j) + jitter) / static_cast<double>(n);
    positions.at(order[j]) = Point{std::cos(angle), std::sin(angle)};
  }
  return Drawing::straight_line(g, std::move(positions));
}

Drawing circular_drawing(const Graph& g) {
  std::vector<Vertex> order(g.vertex_count());
  for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
  return convex_drawing(g, order);
}

Drawing random_drawing(const Graph& g, std::uint64_t seed, const RandomDrawingOptions& options) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> xs(options.box.min.x, options.box.max.x);
  std::uniform_real_distribution<double> ys(options.box.min.y, options.box.max.y);
  for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
    std::vector<Point> positions(g.vertex_count());
    for (Point& p : positions) {
      p.x = xs(rng);
      p.y = ys(rng);
    }
    bool distinct = true;
    for (const Edge& e : g.edges()) distinct = distinct && positions[e.u] != positions[e.v];
    if (!distinct) continue;
    Drawing d = Drawing::straight_line(g, std::move(positions));
    if (validate_general_position(d, options.tolerance).ok()) return d;
  }
  throw Error(ErrorCode::ValidationRetryLimitExceeded,
              "no general-position drawing after " + std::to_string(options.max_retries) + " retries");
}

Drawing k5_one_crossing_drawing() {
  Graph g = complete_graph(5);
  std::vector<Point> positions{{0, 0}, {10, 0}, {10, 10}, {0, 10}, {3, 6}};
  std::vector<Route> routes;
  for (const Edge& e : g.edges()) {
    if (e.u == 1 && e.v == 3)
      routes.push_back({positions[1], {14, 13}, positions[3]});  // around vertex 2
    else
      routes.push_back({positions[e.u], positions[e.v]});
  }
  return Drawing(std::move(g), std::move(positions), std::move(routes));
}

}  // namespace kplanar
