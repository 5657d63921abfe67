#include "kplanar/crossings.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kplanar/error.hpp"
#include "kplanar/predicates.hpp"
#include "segments.hpp"

namespace kplanar {

namespace {

bool on_closed_box(Point a, Point b, Point p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

double point_segment_distance(Point p, Point a, Point b) {
  const Point ab = b - a;
  const Point ap = p - a;
  const double len2 = ab.x * ab.x + ab.y * ab.y;
  double t = (ap.x * ab.x + ap.y * ab.y) / len2;
  t = std::clamp(t, 0.0, 1.0);
  const Point closest{a.x + t * ab.x, a.y + t * ab.y};
  return std::hypot(p.x - closest.x, p.y - closest.y);
}

std::string seg_name(const detail::Segment& s) {
  return "edge " + std::to_string(s.edge) + " segment " + std::to_string(s.index);
}

/// Vertex sitting at point p of segment s, if p is one of its route ends.
std::optional<Vertex> vertex_at(const detail::Segment& s, Point p) {
  if (p == s.a && s.a_vertex) return s.a_vertex;
  if (p == s.b && s.b_vertex) return s.b_vertex;
  return std::nullopt;
}

Point shared_point(const detail::Segment& s, const detail::Segment& t) {
  if (s.a == t.a || s.a == t.b) return s.a;
  return s.b;
}

}  // namespace

namespace detail {

std::vector<Segment> collect_segments(const Drawing& d) {
  std::vector<Segment> segs;
  segs.reserve(d.segment_count());
  for (EdgeIndex e = 0; e < d.routes().size(); ++e) {
    const Route& r = d.route(e);
    const Edge& edge = d.graph().edge(e);
    for (std::size_t j = 0; j + 1 < r.size(); ++j) {
      Segment s;
      s.a = r[j];
      s.b = r[j + 1];
      s.edge = e;
      s.index = j;
      if (j == 0) s.a_vertex = edge.u;
      if (j + 2 == r.size()) s.b_vertex = edge.v;
      segs.push_back(s);
    }
  }
  return segs;
}

}  // namespace detail

SegmentRelation segment_relation(Point a1, Point a2, Point b1, Point b2) {
  if (a1 == a2 || b1 == b2) throw Error(ErrorCode::DegenerateSegment, "segment of zero length");

  const int o1 = orientation(a1, a2, b1);
  const int o2 = orientation(a1, a2, b2);
  if (o1 == 0 && o2 == 0) {
    // Collinear: along a line the lexicographic point order is monotone.
    const auto [alo, ahi] = std::minmax(a1, a2);
    const auto [blo, bhi] = std::minmax(b1, b2);
    const Point lo = std::max(alo, blo);
    const Point hi = std::min(ahi, bhi);
    if (lo < hi) return {SegmentRelationKind::CollinearOverlap, std::nullopt};
    if (lo == hi) return {SegmentRelationKind::SharedEndpoint, std::nullopt};
    return {SegmentRelationKind::Disjoint, std::nullopt};
  }
  const int o3 = orientation(b1, b2, a1);
  const int o4 = orientation(b1, b2, a2);
  if (o1 * o2 < 0 && o3 * o4 < 0) {
    const Point da = a2 - a1;
    const Point db = b2 - b1;
    const double t = cross(b1 - a1, db) / cross(da, db);
    return {SegmentRelationKind::ProperCrossing, Point{a1.x + t * da.x, a1.y + t * da.y}};
  }
  if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return {SegmentRelationKind::SharedEndpoint, std::nullopt};
  if ((o1 == 0 && on_closed_box(a1, a2, b1)) || (o2 == 0 && on_closed_box(a1, a2, b2)) ||
      (o3 == 0 && on_closed_box(b1, b2, a1)) || (o4 == 0 && on_closed_box(b1, b2, a2)))
    return {SegmentRelationKind::EndpointOnInterior, std::nullopt};
  return {SegmentRelationKind::Disjoint, std::nullopt};
}

void CrossingReport::add(EdgePair pair, std::uint64_t count) {
  if (count == 0) return;
  pair_counts[pair] += count;
  total += count;
}

std::string to_csv(const CrossingReport& report) {
  std::ostringstream out;
  out << "edge_a,edge_b,crossings\n";
  for (const auto& [pair, count] : report.pair_counts) out << pair.first << ',' << pair.second << ',' << count << '\n';
  out << "TOTAL,," << report.total << '\n';
  return out.str();
}

double default_tolerance(const Drawing& d) noexcept {
  const double diag = d.bounding_box().diagonal();
  return diag > 0.0 ? 1e-9 * diag : 1e-9;
}

ValidationReport validate_general_position(const Drawing& d, std::optional<double> tol) {
  ValidationReport report;
  report.tolerance = tol.value_or(default_tolerance(d));
  const double eps = report.tolerance;
  auto violate = [&](ViolationKind kind, std::string message) {
    report.violations.push_back({kind, std::move(message)});
  };

  const auto positions = d.positions();
  std::vector<Vertex> by_x(positions.size());
  for (Vertex v = 0; v < by_x.size(); ++v) by_x[v] = v;
  std::sort(by_x.begin(), by_x.end(), [&](Vertex a, Vertex b) { return positions[a] < positions[b]; });
  for (std::size_t i = 1; i < by_x.size(); ++i)
    if (positions[by_x[i]] == positions[by_x[i - 1]])
      violate(ViolationKind::CoincidentVertices,
              "vertices " + std::to_string(by_x[i - 1]) + " and " + std::to_string(by_x[i]) + " coincide");

  std::vector<detail::Segment> segs = detail::collect_segments(d);
  std::sort(segs.begin(), segs.end(), [](const auto& s, const auto& t) { return s.min_x() < t.min_x(); });

  struct Crossing {
    Point p;
    std::size_t s, t;
  };
  std::vector<Crossing> crossing_points;

  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& s = segs[i];
    for (std::size_t j = i + 1; j < segs.size() && segs[j].min_x() <= s.max_x(); ++j) {
      const auto& t = segs[j];
      if (t.min_y() > s.max_y() || s.min_y() > t.max_y()) continue;
      const SegmentRelation rel = segment_relation(s.a, s.b, t.a, t.b);
      if (s.edge == t.edge) {
        const bool adjacent = s.index + 1 == t.index || t.index + 1 == s.index;
        if (adjacent ? rel.kind == SegmentRelationKind::CollinearOverlap : rel.kind != SegmentRelationKind::Disjoint)
          violate(ViolationKind::SelfIntersectingRoute, "route of edge " + std::to_string(s.edge) + " is not simple");
        continue;
      }
      switch (rel.kind) {
        case SegmentRelationKind::Disjoint: break;
        case SegmentRelationKind::ProperCrossing: crossing_points.push_back({*rel.point, i, j}); break;
        case SegmentRelationKind::CollinearOverlap:
          violate(ViolationKind::CollinearOverlap, seg_name(s) + " overlaps " + seg_name(t));
          break;
        case SegmentRelationKind::EndpointOnInterior:
          violate(ViolationKind::EndpointOnInterior, seg_name(s) + " touches " + seg_name(t));
          break;
        case SegmentRelationKind::SharedEndpoint: {
          const Point p = shared_point(s, t);
          const auto vs = vertex_at(s, p);
          const auto vt = vertex_at(t, p);
          if (!vs || !vt || *vs != *vt)
            violate(ViolationKind::TouchingAtNonVertex, seg_name(s) + " and " + seg_name(t) + " touch at a bend");
          break;
        }
      }
    }
  }

  // Segments through or near vertices other than their edge's endpoints.
  std::vector<double> xs(by_x.size());
  for (std::size_t i = 0; i < by_x.size(); ++i) xs[i] = positions[by_x[i]].x;
  for (const auto& s : segs) {
    const Edge& edge = d.graph().edge(s.edge);
    auto it = std::lower_bound(xs.begin(), xs.end(), s.min_x() - eps);
    for (std::size_t i = static_cast<std::size_t>(it - xs.begin()); i < xs.size() && xs[i] <= s.max_x() + eps; ++i) {
      const Vertex w = by_x[i];
      if (edge.has(w)) continue;
      if (point_segment_distance(positions[w], s.a, s.b) < eps)
        violate(ViolationKind::PassesNearVertex, seg_name(s) + " passes within tolerance of vertex " + std::to_string(w));
    }
  }

  // Stand-in for "no three curves through one point".
  std::sort(crossing_points.begin(), crossing_points.end(),
            [](const Crossing& a, const Crossing& b) { return a.p.x < b.p.x; });
  for (std::size_t i = 0; i < crossing_points.size(); ++i) {
    for (std::size_t j = i + 1; j < crossing_points.size() && crossing_points[j].p.x - crossing_points[i].p.x < eps; ++j) {
      const Point a = crossing_points[i].p;
      const Point b = crossing_points[j].p;
      if (std::hypot(a.x - b.x, a.y - b.y) < eps)
        violate(ViolationKind::ConcurrentCrossings,
                "crossings of " + seg_name(segs[crossing_points[i].s]) + "/" + seg_name(segs[crossing_points[i].t]) +
                    " and " + seg_name(segs[crossing_points[j].s]) + "/" + seg_name(segs[crossing_points[j].t]) +
                    " coincide within tolerance");
    }
  }
  return report;
}

namespace detail {

void require_general_position(const Drawing& d, const CountOptions& options) {
  if (!options.validate) return;
  ValidationReport report = validate_general_position(d, options.tolerance);
  if (!report.ok())
    throw Error(ErrorCode::GeneralPositionViolation, report.violations.front().message + " (" +
                                                         std::to_string(report.violations.size()) + " violation(s))");
}

}  // namespace detail

CrossingReport count_crossings_bruteforce(const Drawing& d, const CountOptions& options) {
  detail::require_general_position(d, options);
  const std::vector<detail::Segment> segs = detail::collect_segments(d);
  CrossingReport report;
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (segs[i].edge == segs[j].edge) continue;
      if (segment_relation(segs[i].a, segs[i].b, segs[j].a, segs[j].b).kind == SegmentRelationKind::ProperCrossing)
        report.add(EdgePair::of(segs[i].edge, segs[j].edge));
    }
  return report;
}

}  // namespace kplanar
