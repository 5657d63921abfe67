#include "kplanar/decompose.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <random>
#include <sstream>
#include <thread>

#include "kplanar/error.hpp"
#include "kplanar/random.hpp"

namespace kplanar {

namespace {

void require_k(std::uint32_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidK, "k must be at least 1");
}

void require_covers(const VertexLabeling& labeling, const Graph& g) {
  if (labeling.size() != g.vertex_count())
    throw Error(ErrorCode::LabelingSizeMismatch, "labeling has " + std::to_string(labeling.size()) +
                                                     " entries, graph has " + std::to_string(g.vertex_count()) +
                                                     " vertices");
}

/// One past the largest edge index named by the report.
std::size_t edge_span(const CrossingReport& report) {
  std::size_t top = 0;
  for (const auto& entry : report.pair_counts) top = std::max(top, entry.first.second + 1);
  return top;
}

void require_report_fits(const CrossingReport& report, const Graph& g) {
  if (edge_span(report) > g.edge_count())
    throw Error(ErrorCode::ReportGraphMismatch, "report names edge " + std::to_string(edge_span(report) - 1) +
                                                    " but the graph has " + std::to_string(g.edge_count()) + " edges");
}

/// Flattened crossing pair with its edges' endpoints.
struct CrossingPair {
  Edge a, b;
  std::uint64_t count;
};

std::vector<CrossingPair> flatten(const CrossingReport& report, const Graph& g) {
  std::vector<CrossingPair> pairs;
  pairs.reserve(report.pair_counts.size());
  for (const auto& [pair, count] : report.pair_counts) pairs.push_back({g.edge(pair.first), g.edge(pair.second), count});
  return pairs;
}

std::uint64_t realized(std::span<const CrossingPair> pairs, std::span<const std::uint32_t> labels) {
  std::uint64_t total = 0;
  for (const CrossingPair& c : pairs)
    if (EdgeType::of(labels[c.a.u], labels[c.a.v]) == EdgeType::of(labels[c.b.u], labels[c.b.v])) total += c.count;
  return total;
}

Rational inverse_power(std::uint32_t k, unsigned exponent) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), k, exponent);
  return Rational(mpz_class(1), den);
}

/// Probability that all listed label equalities hold when vertices with
/// fixed[v] keep labels[v] and the rest are uniform on {0..k-1}.
Rational equalities_probability(std::span<const std::pair<Vertex, Vertex>> equal, std::uint32_t k,
                                std::span<const std::uint32_t> labels, std::span<const bool> fixed) {
  std::array<Vertex, 8> ids{};
  std::array<std::size_t, 8> parent{};
  std::size_t count = 0;
  auto local = [&](Vertex v) {
    for (std::size_t i = 0; i < count; ++i)
      if (ids[i] == v) return i;
    ids[count] = v;
    parent[count] = count;
    return count++;
  };
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i];
    return i;
  };
  for (auto [x, y] : equal) {
    const std::size_t rx = find(local(x));
    const std::size_t ry = find(local(y));
    if (rx != ry) parent[rx] = ry;
  }
  unsigned exponent = 0;
  for (std::size_t root = 0; root < count; ++root) {
    if (find(root) != root) continue;
    std::size_t free_members = 0;
    std::optional<std::uint32_t> pinned;
    for (std::size_t i = 0; i < count; ++i) {
      if (find(i) != root) continue;
      if (!fixed[ids[i]]) {
        ++free_members;
      } else if (!pinned) {
        pinned = labels[ids[i]];
      } else if (*pinned != labels[ids[i]]) {
        return Rational(0);
      }
    }
    exponent += static_cast<unsigned>(pinned ? free_members : free_members - 1);
  }
  return inverse_power(k, exponent);
}

/// P[type(a) == type(b)] = P[E1] + P[E2] - P[E1 and E2], where E1 matches
/// a.u~b.u, a.v~b.v and E2 matches a.u~b.v, a.v~b.u.
Rational pair_same_type_probability(const Edge& a, const Edge& b, std::uint32_t k,
                                    std::span<const std::uint32_t> labels, std::span<const bool> fixed) {
  const std::array<std::pair<Vertex, Vertex>, 2> e1{{{a.u, b.u}, {a.v, b.v}}};
  const std::array<std::pair<Vertex, Vertex>, 2> e2{{{a.u, b.v}, {a.v, b.u}}};
  const std::array<std::pair<Vertex, Vertex>, 3> both{{{a.u, a.v}, {a.u, b.u}, {a.u, b.v}}};
  return equalities_probability(e1, k, labels, fixed) + equalities_probability(e2, k, labels, fixed) -
         equalities_probability(both, k, labels, fixed);
}

}  // namespace

VertexLabeling::VertexLabeling(std::uint32_t k, std::vector<std::uint32_t> labels) : k_(k), labels_(std::move(labels)) {
  require_k(k_);
  for (std::size_t v = 0; v < labels_.size(); ++v)
    if (labels_[v] >= k_)
      throw Error(ErrorCode::InvalidK, "label " + std::to_string(labels_[v]) + " of vertex " + std::to_string(v) +
                                           " is not below k=" + std::to_string(k_));
}

VertexLabeling sample_labeling(std::size_t n, std::uint32_t k, std::uint64_t seed) {
  require_k(k);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, k - 1);
  std::vector<std::uint32_t> labels(n);
  for (auto& l : labels) l = pick(rng);
  return VertexLabeling(k, std::move(labels));
}

EdgeAssignment edge_assignment(const VertexLabeling& labeling, const Edge& edge) {
  const std::uint32_t a = labeling[edge.u];
  const std::uint32_t b = labeling[edge.v];
  return {EdgeType::of(a, b), static_cast<std::uint32_t>((std::uint64_t{a} + b) % labeling.k())};
}

std::vector<std::size_t> Decomposition::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(parts_.size());
  for (const auto& part : parts_) out.push_back(part.size());
  return out;
}

Decomposition decompose(const Graph& g, const VertexLabeling& labeling) {
  require_covers(labeling, g);
  Decomposition d;
  d.k_ = labeling.k();
  d.parts_.resize(d.k_);
  d.assignment_.reserve(g.edge_count());
  d.types_.reserve(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const EdgeAssignment a = edge_assignment(labeling, g.edge(e));
    d.assignment_.push_back(a.index);
    d.types_.push_back(a.type);
    d.parts_[a.index].push_back(e);
  }
  return d;
}

std::string to_csv(const Graph& g, const Decomposition& decomposition) {
  std::ostringstream out;
  out << "edge_u,edge_v,type_g,type_h,subgraph\n";
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const EdgeType t = decomposition.types()[e];
    out << g.edge(e).u << ',' << g.edge(e).v << ',' << t.g << ',' << t.h << ',' << decomposition.assignment()[e] << '\n';
  }
  return out.str();
}

PairPattern pair_pattern(const Edge& a, const Edge& b) noexcept {
  if (a == b) return PairPattern::SameEdge;
  if (a.has(b.u) || a.has(b.v)) return PairPattern::SharedVertex;
  return PairPattern::DisjointPair;
}

Rational same_type_probability(std::uint32_t k, PairPattern pattern) {
  require_k(k);
  const std::int64_t kk = k;
  switch (pattern) {
    case PairPattern::DisjointPair: return make_rational(2 * kk - 1, kk * kk * kk);
    case PairPattern::SharedVertex: return make_rational(1, kk);
    case PairPattern::SameEdge: return Rational(1);
  }
  return Rational(0);
}

Rational expected_monochromatic_crossings(const CrossingReport& report, const Graph& g, std::uint32_t k) {
  require_k(k);
  require_report_fits(report, g);
  std::array<std::uint64_t, 3> by_pattern{};
  for (const auto& [pair, count] : report.pair_counts)
    by_pattern[static_cast<std::size_t>(pair_pattern(g.edge(pair.first), g.edge(pair.second)))] += count;
  Rational sum = 0;
  for (std::size_t p = 0; p < by_pattern.size(); ++p)
    sum += to_rational(by_pattern[p]) * same_type_probability(k, static_cast<PairPattern>(p));
  return sum;
}

std::uint64_t realized_crossings(const CrossingReport& report, const Graph& g, const VertexLabeling& labeling) {
  require_covers(labeling, g);
  require_report_fits(report, g);
  return realized(flatten(report, g), labeling.labels());
}

MonteCarloResult monte_carlo(const CrossingReport& report, const Graph& g, std::uint32_t k, std::uint64_t trials,
                             std::uint64_t seed, unsigned threads) {
  require_k(k);
  if (trials == 0) throw Error(ErrorCode::InvalidK, "monte_carlo needs at least one trial");
  require_report_fits(report, g);
  const std::vector<CrossingPair> pairs = flatten(report, g);
  const std::size_t n = g.vertex_count();

  std::vector<std::uint64_t> samples(trials);
  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t t = begin; t < end; ++t)
      samples[t] = realized(pairs, sample_labeling(n, k, derive_seed(seed, t)).labels());
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(trials, 256))));
  if (threads == 1) {
    run_range(0, trials);
  } else {
    std::vector<std::jthread> workers;
    const std::uint64_t chunk = (trials + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min<std::uint64_t>(trials, begin + chunk);
      if (begin < end) workers.emplace_back(run_range, begin, end);
    }
  }

  std::uint64_t best_trial = 0;
  mpz_class sum = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    if (samples[t] < samples[best_trial]) best_trial = t;
    sum += to_rational(samples[t]).get_num();
  }
  Rational mean(sum, to_rational(trials).get_num());
  mean.canonicalize();
  return MonteCarloResult{sample_labeling(n, k, derive_seed(seed, best_trial)), samples[best_trial], best_trial,
                          std::move(mean), std::move(samples)};
}

Rational conditional_expectation(const CrossingReport& report, const Graph& g, std::uint32_t k,
                                 std::span<const std::uint32_t> labels, std::span<const bool> fixed) {
  require_k(k);
  require_report_fits(report, g);
  if (labels.size() != g.vertex_count() || fixed.size() != g.vertex_count())
    throw Error(ErrorCode::LabelingSizeMismatch, "partial labeling does not cover the graph");
  Rational sum = 0;
  for (const CrossingPair& c : flatten(report, g))
    sum += to_rational(c.count) * pair_same_type_probability(c.a, c.b, k, labels, fixed);
  return sum;
}

VertexLabeling derandomize(const CrossingReport& report, const Graph& g, std::uint32_t k) {
  require_k(k);
  require_report_fits(report, g);
  const std::vector<CrossingPair> pairs = flatten(report, g);
  const std::size_t n = g.vertex_count();

  std::vector<std::vector<std::size_t>> touching(n);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::array<Vertex, 4> vs{pairs[i].a.u, pairs[i].a.v, pairs[i].b.u, pairs[i].b.v};
    std::sort(vs.begin(), vs.end());
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (j == 0 || vs[j] != vs[j - 1]) touching[vs[j]].push_back(i);
  }

  std::vector<std::uint32_t> labels(n, 0);
  // std::vector<bool> has no contiguous storage.
  std::unique_ptr<bool[]> fixed(new bool[n]());
  for (Vertex v = 0; v < n; ++v) {
    fixed[v] = true;
    std::uint32_t best_label = 0;
    Rational best_score;
    for (std::uint32_t c = 0; c < k; ++c) {
      labels[v] = c;
      Rational score = 0;
      for (std::size_t i : touching[v])
        score += to_rational(pairs[i].count) *
                 pair_same_type_probability(pairs[i].a, pairs[i].b, k, labels, std::span<const bool>(fixed.get(), n));
      if (c == 0 || score < best_score) {
        best_score = std::move(score);
        best_label = c;
      }
      if (touching[v].empty()) break;
    }
    labels[v] = best_label;
  }
  return VertexLabeling(k, std::move(labels));
}

EdgeColoring::EdgeColoring(std::uint32_t k, std::vector<std::uint32_t> colors) : k_(k), colors_(std::move(colors)) {
  require_k(k_);
  for (std::size_t e = 0; e < colors_.size(); ++e)
    if (colors_[e] >= k_)
      throw Error(ErrorCode::InvalidK, "color " + std::to_string(colors_[e]) + " of edge " + std::to_string(e) +
                                           " is not below k=" + std::to_string(k_));
}

EdgeColoring uniform_edge_coloring(const Graph& g, std::uint32_t k, std::uint64_t seed) {
  require_k(k);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, k - 1);
  std::vector<std::uint32_t> colors(g.edge_count());
  for (auto& c : colors) c = pick(rng);
  return EdgeColoring(k, std::move(colors));
}

std::uint64_t monochromatic_crossings(const CrossingReport& report, const EdgeColoring& coloring) {
  if (edge_span(report) > coloring.size())
    throw Error(ErrorCode::ColoringSizeMismatch, "coloring has " + std::to_string(coloring.size()) +
                                                     " edges, report names edge " + std::to_string(edge_span(report) - 1));
  std::uint64_t total = 0;
  for (const auto& [pair, count] : report.pair_counts)
    if (coloring[pair.first] == coloring[pair.second]) total += count;
  return total;
}

Rational expected_coloring_crossings(const CrossingReport& report, std::uint32_t k) {
  require_k(k);
  return to_rational(report.total) / Rational(k);
}

}  // namespace kplanar
