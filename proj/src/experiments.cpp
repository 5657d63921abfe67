#include "kplanar/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "kplanar/crossings.hpp"
#include "kplanar/decompose.hpp"
#include "kplanar/error.hpp"
#include "kplanar/io.hpp"
#include "kplanar/random.hpp"

namespace kplanar {

namespace {

bool chords_cross(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
  if (p > q) std::swap(p, q);
  const bool r_inside = p < r && r < q;
  const bool s_inside = p < s && s < q;
  return r_inside != s_inside;
}

/// Local search state over a circular order.
class CircularOrder {
 public:
  CircularOrder(const Graph& g, std::vector<Vertex> order)
      : neighbors_(g.vertex_count()), order_(std::move(order)), slot_(order_.size()) {
    for (const Edge& e : g.edges()) {
      neighbors_[e.u].push_back(e.v);
      neighbors_[e.v].push_back(e.u);
    }
    for (std::size_t j = 0; j < order_.size(); ++j) slot_[order_[j]] = j;
    crossings_ = convex_crossings(g, order_);
  }

  /// Change in crossings from exchanging the circle-adjacent vertices a
  /// and b. Every chord pair a-x, b-y with four distinct ends flips.
  std::int64_t swap_delta(Vertex a, Vertex b) const {
    std::int64_t delta = 0;
    for (Vertex x : neighbors_[a]) {
      if (x == b) continue;
      for (Vertex y : neighbors_[b]) {
        if (y == a || y == x) continue;
        delta += chords_cross(slot_[a], slot_[x], slot_[b], slot_[y]) ? -1 : 1;
      }
    }
    return delta;
  }

  void hill_climb() {
    const std::size_t n = order_.size();
    if (n < 4) return;
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t k = (j + 1) % n;
        const Vertex a = order_[j];
        const Vertex b = order_[k];
        const std::int64_t delta = swap_delta(a, b);
        if (delta < 0) {
          std::swap(order_[j], order_[k]);
          slot_[a] = k;
          slot_[b] = j;
          crossings_ = static_cast<std::uint64_t>(static_cast<std::int64_t>(crossings_) + delta);
          improved = true;
        }
      }
    }
  }

  std::uint64_t crossings() const noexcept { return crossings_; }
  const std::vector<Vertex>& order() const noexcept { return order_; }

 private:
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> slot_;
  std::uint64_t crossings_ = 0;
};

std::uint64_t cell_seed(std::uint64_t seed, std::size_t n, std::size_t e) { return derive_seed(derive_seed(seed, n), e); }

}  // namespace

std::uint64_t convex_crossings(const Graph& g, std::span<const Vertex> order) {
  std::vector<std::size_t> slot(g.vertex_count());
  for (std::size_t j = 0; j < order.size(); ++j) slot.at(order[j]) = j;
  const auto edges = g.edges();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      if (a.has(b.u) || a.has(b.v)) continue;
      if (chords_cross(slot[a.u], slot[a.v], slot[b.u], slot[b.v])) ++total;
    }
  return total;
}

CircularSearchResult improve_circular(const Graph& g, std::size_t restarts, std::uint64_t seed) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> identity(n);
  std::iota(identity.begin(), identity.end(), Vertex{0});

  std::vector<Vertex> best_order;
  std::uint64_t best = 0;
  for (std::size_t r = 0; r < std::max<std::size_t>(restarts, 1); ++r) {
    std::vector<Vertex> start = identity;
    if (r > 0) {
      std::mt19937_64 rng(derive_seed(seed, r));
      std::shuffle(start.begin(), start.end(), rng);
    }
    CircularOrder search(g, std::move(start));
    search.hill_climb();
    if (r == 0 || search.crossings() < best) {
      best = search.crossings();
      best_order = search.order();
    }
  }
  return {convex_drawing(g, best_order), best_order, best};
}

MidrangeRun midrange_experiment(const std::vector<std::size_t>& n_values, const std::vector<double>& density_exponents,
                                std::size_t restarts, std::uint64_t seed) {
  if (n_values.empty() || density_exponents.empty()) throw Error(ErrorCode::InvalidGrid, "empty grid");
  if (restarts == 0) throw Error(ErrorCode::InvalidGrid, "restarts must be at least 1");
  for (double a : density_exponents)
    if (!std::isfinite(a) || a <= 0.0) throw Error(ErrorCode::InvalidGrid, "density exponents must be positive");

  MidrangeRun run;
  std::set<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t n : n_values)
    for (double a : density_exponents) {
      const auto e = static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(n), a)));
      if (!(n < e && e < pair_count(n))) {
        std::ostringstream msg;
        msg << "skipping n=" << n << " e=" << e << " (exponent " << a << "): outside n < e < C(n,2)";
        run.warnings.push_back(msg.str());
        continue;
      }
      cells.emplace(n, e);
    }

  for (auto [n, e] : cells) {
    const std::uint64_t s = cell_seed(seed, n, e);
    const Graph g = gnm_random(n, e, s);
    const CircularSearchResult best = improve_circular(g, restarts, s);
    const double nd = static_cast<double>(n);
    const double ed = static_cast<double>(e);
    run.rows.push_back({n, e, best.crossings, static_cast<double>(best.crossings) * nd * nd / (ed * ed * ed), restarts, s});
  }
  std::sort(run.rows.begin(), run.rows.end(), [](const MidrangeEstimate& a, const MidrangeEstimate& b) {
    return std::tie(a.n, a.e, a.seed) < std::tie(b.n, b.e, b.seed);
  });
  return run;
}

std::string to_csv(const MidrangeRun& run) {
  std::ostringstream out;
  out << "# upper-bound estimates: cr_upper comes from convex-position local search, so scaled over-estimates "
         "kappa(n,e)*n^2/e^3\n"
      << "# reference: midrange crossing constant K in [0.034, 0.09]\n"
      << "n,e,restarts,seed,cr_upper,scaled\n";
  for (const MidrangeEstimate& r : run.rows)
    out << r.n << ',' << r.e << ',' << r.restarts << ',' << r.seed << ',' << r.crossings_upper << ','
        << io::format_double(r.scaled) << '\n';
  return out.str();
}

RatioRecord ratio_for_drawing(const Drawing& d, std::uint32_t k, std::uint64_t trials, std::uint64_t seed) {
  if (k == 0) throw Error(ErrorCode::InvalidK, "k must be at least 1");
  const CrossingReport report = count_crossings_sweep(d);
  if (report.total == 0) throw Error(ErrorCode::PlanarInstance, "drawing has no crossings; ratio undefined");
  const Graph& g = d.graph();

  std::uint64_t best = realized_crossings(report, g, derandomize(report, g, k));
  if (trials > 0) best = std::min(best, monte_carlo(report, g, k, trials, seed).best_value);

  const double kd = k;
  RatioRecord record;
  record.n = g.vertex_count();
  record.e = g.edge_count();
  record.k = k;
  record.cr_upper = report.total;
  record.crk_upper = best;
  record.ratio = static_cast<double>(best) / static_cast<double>(report.total);
  record.band_low = 1.0 / (kd * kd);
  record.band_high = 2.0 / (kd * kd) - 1.0 / (kd * kd * kd);
  return record;
}

RatioRecord ratio_experiment(const Graph& g, std::uint32_t k, std::uint64_t trials, std::uint64_t seed,
                             std::size_t restarts) {
  return ratio_for_drawing(improve_circular(g, restarts, seed).drawing, k, trials, seed);
}

std::string to_csv(const std::vector<RatioRecord>& records) {
  std::ostringstream out;
  out << "n,e,k,cr_upper,crk_upper,ratio,band_low,band_high\n";
  for (const RatioRecord& r : records)
    out << r.n << ',' << r.e << ',' << r.k << ',' << r.cr_upper << ',' << r.crk_upper << ','
        << io::format_double(r.ratio) << ',' << io::format_double(r.band_low) << ','
        << io::format_double(r.band_high) << '\n';
  return out.str();
}

}  // namespace kplanar
