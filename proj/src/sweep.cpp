#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <string>

#include <gmpxx.h>

#include "kplanar/crossings.hpp"
#include "kplanar/error.hpp"
#include "segments.hpp"

namespace kplanar {

namespace {

/// Exact event point; ordered lexicographically (x, then y).
struct EventPoint {
  mpq_class x, y;

  explicit EventPoint(Point p) : x(p.x), y(p.y) {}
  EventPoint(mpq_class x_, mpq_class y_) : x(std::move(x_)), y(std::move(y_)) {}

  friend bool operator<(const EventPoint& a, const EventPoint& b) {
    const int c = cmp(a.x, b.x);
    return c < 0 || (c == 0 && a.y < b.y);
  }
  friend bool operator==(const EventPoint& a, const EventPoint& b) { return a.x == b.x && a.y == b.y; }
};

struct SweepSegment {
  detail::Segment seg;
  EventPoint left, right;
  bool vertical = false;
  mpq_class slope, intercept;  // y = slope * x + intercept, unless vertical
  std::optional<Vertex> left_vertex, right_vertex;
};

[[noreturn]] void degenerate(const std::string& what) {
  throw Error(ErrorCode::GeneralPositionViolation, "sweep met " + what);
}

class Sweep {
 public:
  explicit Sweep(const Drawing& d) : sweep_point_(Point{0.0, 0.0}), status_(Less{this}) {
    for (const detail::Segment& s : detail::collect_segments(d)) {
      const bool forward = s.a < s.b;
      SweepSegment ss{s, EventPoint(forward ? s.a : s.b), EventPoint(forward ? s.b : s.a), false, {}, {}, {}, {}};
      ss.left_vertex = forward ? s.a_vertex : s.b_vertex;
      ss.right_vertex = forward ? s.b_vertex : s.a_vertex;
      ss.vertical = ss.left.x == ss.right.x;
      if (!ss.vertical) {
        ss.slope = (ss.right.y - ss.left.y) / (ss.right.x - ss.left.x);
        ss.intercept = ss.left.y - ss.slope * ss.left.x;
      }
      segs_.push_back(std::move(ss));
    }
    handles_.resize(segs_.size());
    for (std::size_t i = 0; i < segs_.size(); ++i) {
      events_[segs_[i].left].push_back(i);
      events_.try_emplace(segs_[i].right);
    }
  }

  CrossingReport run() {
    while (!events_.empty()) {
      auto node = events_.extract(events_.begin());
      handle_event(node.key(), node.mapped());
    }
    return std::move(report_);
  }

 private:
  struct AtSweepPoint {};

  struct Less {
    Sweep* sweep;
    using is_transparent = void;

    bool operator()(std::size_t a, std::size_t b) const { return sweep->segment_less(a, b); }
    bool operator()(std::size_t a, AtSweepPoint) const { return sweep->y_at_sweep(a) < sweep->sweep_point_.y; }
    bool operator()(AtSweepPoint, std::size_t b) const { return sweep->sweep_point_.y < sweep->y_at_sweep(b); }
  };

  using Status = std::set<std::size_t, Less>;

  mpq_class y_at_sweep(std::size_t i) const {
    const SweepSegment& s = segs_[i];
    if (s.vertical) {
      if (sweep_point_.y < s.left.y) return s.left.y;
      if (s.right.y < sweep_point_.y) return s.right.y;
      return sweep_point_.y;
    }
    return s.slope * sweep_point_.x + s.intercept;
  }

  // Order just to the right of the sweep point: by height, then by slope
  // (vertical last), then by index.
  bool segment_less(std::size_t a, std::size_t b) const {
    if (a == b) return false;
    const int c = cmp(y_at_sweep(a), y_at_sweep(b));
    if (c != 0) return c < 0;
    const SweepSegment& sa = segs_[a];
    const SweepSegment& sb = segs_[b];
    if (sa.vertical != sb.vertical) return sb.vertical;
    if (!sa.vertical) {
      const int s = cmp(sa.slope, sb.slope);
      if (s != 0) return s < 0;
    }
    return a < b;
  }

  void handle_event(const EventPoint& p, const std::vector<std::size_t>& upper) {
    sweep_point_ = p;
    auto [lo, hi] = status_.equal_range(AtSweepPoint{});
    std::vector<std::size_t> lower, interior;
    for (auto it = lo; it != hi; ++it) (segs_[*it].right == p ? lower : interior).push_back(*it);

    check_contacts(upper, lower, interior);
    for (std::size_t i = 0; i < interior.size(); ++i)
      for (std::size_t j = i + 1; j < interior.size(); ++j) {
        const EdgeIndex ea = segs_[interior[i]].seg.edge;
        const EdgeIndex eb = segs_[interior[j]].seg.edge;
        if (ea == eb) degenerate("a self-intersecting route of edge " + std::to_string(ea));
        report_.add(EdgePair::of(ea, eb));
      }

    for (std::size_t s : lower) status_.erase(handles_[s]);
    for (std::size_t s : interior) status_.erase(handles_[s]);
    for (std::size_t s : upper) handles_[s] = status_.insert(s).first;
    for (std::size_t s : interior) handles_[s] = status_.insert(s).first;

    if (upper.empty() && interior.empty()) {
      auto above = status_.upper_bound(AtSweepPoint{});
      if (above != status_.begin() && above != status_.end()) find_new_event(*std::prev(above), *above, p);
      return;
    }
    auto first = status_.lower_bound(AtSweepPoint{});
    auto last = std::prev(status_.upper_bound(AtSweepPoint{}));
    if (first != status_.begin()) find_new_event(*std::prev(first), *first, p);
    if (auto next = std::next(last); next != status_.end()) find_new_event(*last, *next, p);
  }

  void check_contacts(const std::vector<std::size_t>& upper, const std::vector<std::size_t>& lower,
                      const std::vector<std::size_t>& interior) const {
    const bool has_endpoint = !upper.empty() || !lower.empty();
    if (has_endpoint && !interior.empty()) degenerate("an endpoint on the interior of another segment");
    if (!has_endpoint) return;
    // Endpoints meeting here: either one vertex shared by route ends, or
    // a single bend of one route.
    std::map<EdgeIndex, int> per_edge;
    bool all_vertex_ends = true;
    auto visit = [&](std::size_t s, bool is_left) {
      ++per_edge[segs_[s].seg.edge];
      all_vertex_ends = all_vertex_ends && (is_left ? segs_[s].left_vertex : segs_[s].right_vertex).has_value();
    };
    for (std::size_t s : upper) visit(s, true);
    for (std::size_t s : lower) visit(s, false);
    for (const auto& [edge, count] : per_edge) {
      if (count > 2 || (count == 2 && all_vertex_ends))
        degenerate("a self-intersecting route of edge " + std::to_string(edge));
    }
    if (per_edge.size() > 1 && !all_vertex_ends) degenerate("routes touching at a bend");
  }

  void find_new_event(std::size_t a, std::size_t b, const EventPoint& p) {
    const SweepSegment& s = segs_[a];
    const SweepSegment& t = segs_[b];
    const SegmentRelation rel = segment_relation(s.seg.a, s.seg.b, t.seg.a, t.seg.b);
    if (rel.kind == SegmentRelationKind::CollinearOverlap) degenerate("collinear overlapping segments");
    if (rel.kind != SegmentRelationKind::ProperCrossing) return;  // contacts sit at endpoint events already

    const mpq_class dax = s.right.x - s.left.x, day = s.right.y - s.left.y;
    const mpq_class dbx = t.right.x - t.left.x, dby = t.right.y - t.left.y;
    const mpq_class denom = dax * dby - day * dbx;
    const mpq_class num = (t.left.x - s.left.x) * dby - (t.left.y - s.left.y) * dbx;
    const mpq_class u = num / denom;
    EventPoint q(s.left.x + u * dax, s.left.y + u * day);
    if (p < q) events_.try_emplace(std::move(q));
  }

  std::vector<SweepSegment> segs_;
  EventPoint sweep_point_;
  std::map<EventPoint, std::vector<std::size_t>> events_;
  Status status_;
  std::vector<Status::iterator> handles_;
  CrossingReport report_;
};

}  // namespace

CrossingReport count_crossings_sweep(const Drawing& d, const CountOptions& options) {
  detail::require_general_position(d, options);
  return Sweep(d).run();
}

}  // namespace kplanar
