#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace kplanar {

using Vertex = std::size_t;
using EdgeIndex = std::size_t;

/// Undirected edge stored in canonical order (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  bool has(Vertex w) const noexcept { return u == w || v == w; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex i) const { return edges_.at(i); }

  /// Edge indices incident to each vertex.
  std::vector<std::vector<EdgeIndex>> incidence() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Validates and canonicalizes an edge list. Edge order is preserved.
/// Throws Error{SelfLoop | DuplicateEdge | EndpointOutOfRange}.
Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

inline Graph build_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

/// K_n with edges in lexicographic order.
Graph complete_graph(std::size_t n);

/// Uniform simple graph with exactly m edges; deterministic per seed.
/// Edges come out in lexicographic order. Throws Error{TooManyEdges}.
Graph gnm_random(std::size_t n, std::size_t m, std::uint64_t seed);

/// Sub-graph on the same vertex set keeping the listed edges, in that order.
Graph edge_subgraph(const Graph& g, std::span<const EdgeIndex> keep);

/// Number of unordered pairs, C(n, 2).
constexpr std::uint64_t pair_count(std::uint64_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace kplanar
