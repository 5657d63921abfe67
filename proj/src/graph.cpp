#include "kplanar/graph.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <unordered_set>

#include "kplanar/error.hpp"

namespace kplanar {

namespace {

std::string edge_name(Vertex u, Vertex v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EndpointOutOfRange: return "EndpointOutOfRange";
    case ErrorCode::TooManyEdges: return "TooManyEdges";
    case ErrorCode::InvalidDrawing: return "InvalidDrawing";
    case ErrorCode::ValidationRetryLimitExceeded: return "ValidationRetryLimitExceeded";
    case ErrorCode::DegenerateSegment: return "DegenerateSegment";
    case ErrorCode::GeneralPositionViolation: return "GeneralPositionViolation";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::LabelingSizeMismatch: return "LabelingSizeMismatch";
    case ErrorCode::ColoringSizeMismatch: return "ColoringSizeMismatch";
    case ErrorCode::ReportGraphMismatch: return "ReportGraphMismatch";
    case ErrorCode::ValidationFailure: return "ValidationFailure";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::PlanarInstance: return "PlanarInstance";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::vector<std::vector<EdgeIndex>> Graph::incidence() const {
  std::vector<std::vector<EdgeIndex>> inc(n_);
  for (EdgeIndex i = 0; i < edges_.size(); ++i) {
    inc[edges_[i].u].push_back(i);
    inc[edges_[i].v].push_back(i);
  }
  return inc;
}

Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  std::set<Edge> seen;
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw Error(ErrorCode::EndpointOutOfRange, "edge " + edge_name(a, b) + " with n=" + std::to_string(n));
    if (a == b) throw Error(ErrorCode::SelfLoop, "edge " + edge_name(a, b));
    Edge e{std::min(a, b), std::max(a, b)};
    if (!seen.insert(e).second) throw Error(ErrorCode::DuplicateEdge, "edge " + edge_name(a, b));
    g.edges_.push_back(e);
  }
  return g;
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(pair_count(n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return build_graph(n, edges);
}

Graph gnm_random(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t total = pair_count(n);
  if (m > total)
    throw Error(ErrorCode::TooManyEdges, std::to_string(m) + " edges requested, C(n,2)=" + std::to_string(total));

  // Floyd's sampling of m distinct pair ranks out of C(n,2).
  std::mt19937_64 rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  for (std::uint64_t j = total - m; j < total; ++j) {
    std::uniform_int_distribution<std::uint64_t> pick(0, j);
    std::uint64_t t = pick(rng);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> ranks(chosen.begin(), chosen.end());
  std::sort(ranks.begin(), ranks.end());

  // Rank r enumerates pairs (u, v), u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m);
  Vertex u = 0;
  std::uint64_t row_start = 0;
  for (std::uint64_t r : ranks) {
    while (r >= row_start + (n - 1 - u)) {
      row_start += n - 1 - u;
      ++u;
    }
    edges.emplace_back(u, u + 1 + (r - row_start));
  }
  return build_graph(n, edges);
}

Graph edge_subgraph(const Graph& g, std::span<const EdgeIndex> keep) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(keep.size());
  for (EdgeIndex i : keep) edges.emplace_back(g.edge(i).u, g.edge(i).v);
  return build_graph(g.vertex_count(), edges);
}

}  // namespace kplanar
