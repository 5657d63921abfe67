#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kplanar/crossings.hpp"
#include "kplanar/drawing.hpp"
#include "kplanar/graph.hpp"
#include "kplanar/rational.hpp"

namespace kplanar {

/// Class assignment v -> {0..k-1}.
class VertexLabeling {
 public:
  /// Throws Error{InvalidK} for k = 0 or a label >= k.
  VertexLabeling(std::uint32_t k, std::vector<std::uint32_t> labels);

  std::uint32_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return labels_.size(); }
  std::uint32_t operator[](Vertex v) const { return labels_.at(v); }
  std::span<const std::uint32_t> labels() const noexcept { return labels_; }

  friend bool operator==(const VertexLabeling&, const VertexLabeling&) = default;

 private:
  std::uint32_t k_;
  std::vector<std::uint32_t> labels_;
};

/// Unordered label pair {g, h} with g <= h.
struct EdgeType {
  std::uint32_t g = 0;
  std::uint32_t h = 0;

  static EdgeType of(std::uint32_t a, std::uint32_t b) noexcept {
    return a <= b ? EdgeType{a, b} : EdgeType{b, a};
  }
  friend auto operator<=>(const EdgeType&, const EdgeType&) = default;
};

struct EdgeAssignment {
  EdgeType type;
  std::uint32_t index = 0;
};

/// I.i.d. uniform labels, deterministic per seed. Throws Error{InvalidK}.
VertexLabeling sample_labeling(std::size_t n, std::uint32_t k, std::uint64_t seed);

/// Type {l(u), l(v)} and subgraph index (l(u) + l(v)) mod k.
EdgeAssignment edge_assignment(const VertexLabeling& labeling, const Edge& edge);

/// Edge partition E(G_0), ..., E(G_{k-1}) induced by a labeling.
class Decomposition {
 public:
  std::uint32_t k() const noexcept { return k_; }
  /// Subgraph index of each edge.
  std::span<const std::uint32_t> assignment() const noexcept { return assignment_; }
  /// Type of each edge.
  std::span<const EdgeType> types() const noexcept { return types_; }
  /// Edge indices of G_i, in increasing order.
  std::span<const EdgeIndex> subgraph_edges(std::uint32_t i) const { return parts_.at(i); }
  std::vector<std::size_t> sizes() const;

  /// The unique class h with g + h = i (mod k).
  std::uint32_t partner(std::uint32_t i, std::uint32_t g) const noexcept { return (i + k_ - g % k_) % k_; }

 private:
  friend Decomposition decompose(const Graph& g, const VertexLabeling& labeling);

  std::uint32_t k_ = 1;
  std::vector<std::uint32_t> assignment_;
  std::vector<EdgeType> types_;
  std::vector<std::vector<EdgeIndex>> parts_;
};

/// Throws Error{LabelingSizeMismatch}.
Decomposition decompose(const Graph& g, const VertexLabeling& labeling);

/// "edge_u,edge_v,type_g,type_h,subgraph", one row per edge in edge order.
std::string to_csv(const Graph& g, const Decomposition& decomposition);

/// How two edges of a crossing pair relate.
enum class PairPattern { DisjointPair, SharedVertex, SameEdge };

PairPattern pair_pattern(const Edge& a, const Edge& b) noexcept;

/// Probability that two edges in the given pattern receive the same type
/// under i.i.d. uniform labels: 2/k^2 - 1/k^3, 1/k or 1.
Rational same_type_probability(std::uint32_t k, PairPattern pattern);

/// Exact expected number of crossings that survive the decomposition.
/// Throws Error{ReportGraphMismatch | InvalidK}.
Rational expected_monochromatic_crossings(const CrossingReport& report, const Graph& g, std::uint32_t k);

/// Crossings whose two edges have equal type. Throws Error{LabelingSizeMismatch}.
std::uint64_t realized_crossings(const CrossingReport& report, const Graph& g, const VertexLabeling& labeling);

/// Translation applied to one type class inside one layer.
struct TypeOffset {
  EdgeType type;
  Point offset;
};

struct Layer {
  /// G_i drawn on all n vertices; edge j of this drawing is source_edges[j].
  Drawing drawing;
  std::vector<EdgeIndex> source_edges;
  std::vector<TypeOffset> offsets;
};

/// One drawing per subgraph with its type classes pulled apart.
struct LayeredDrawing {
  std::uint32_t k = 1;
  /// Separation actually used between class boxes.
  double padding = 0.0;
  /// Validation tolerance of the source drawing.
  double tolerance = 0.0;
  std::vector<Layer> layers;
};

/// Places each type class of G_i in its own grid cell, translated rigidly,
/// with cells separated by max(source diagonal, padding).
/// Throws Error{ValidationFailure | LabelingSizeMismatch}.
LayeredDrawing layered_layout(const Drawing& d, const VertexLabeling& labeling, double padding = 0.0);

/// "layer,type_g,type_h,dx,dy".
std::string offsets_csv(const LayeredDrawing& layered);

struct MonteCarloResult {
  VertexLabeling best;
  std::uint64_t best_value = 0;
  std::uint64_t best_trial = 0;
  Rational mean;
  std::vector<std::uint64_t> samples;
};

/// Trial t samples a labeling with seed derive_seed(seed, t). The best
/// trial minimizes (value, trial index). Results do not depend on
/// `threads`. Throws Error{InvalidK} (also for trials = 0).
MonteCarloResult monte_carlo(const CrossingReport& report, const Graph& g, std::uint32_t k, std::uint64_t trials,
                             std::uint64_t seed, unsigned threads = 1);
MonteCarloResult monte_carlo(const Drawing& d, std::uint32_t k, std::uint64_t trials, std::uint64_t seed,
                             unsigned threads = 1);

/// Expected surviving crossings with the labels of vertices marked in
/// `fixed` pinned to `labels` and all others uniform.
Rational conditional_expectation(const CrossingReport& report, const Graph& g, std::uint32_t k,
                                 std::span<const std::uint32_t> labels, std::span<const bool> fixed);

/// Method of conditional expectations: vertices fixed in index order, each
/// taking the smallest label minimizing the conditional expectation.
/// The result never realizes more than the expectation.
VertexLabeling derandomize(const CrossingReport& report, const Graph& g, std::uint32_t k);
/// Throws Error{ValidationFailure}.
VertexLabeling derandomize(const Drawing& d, std::uint32_t k);

/// Colors per edge in {0..k-1}.
class EdgeColoring {
 public:
  /// Throws Error{InvalidK} for k = 0 or a color >= k.
  EdgeColoring(std::uint32_t k, std::vector<std::uint32_t> colors);

  std::uint32_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return colors_.size(); }
  std::uint32_t operator[](EdgeIndex e) const { return colors_.at(e); }
  std::span<const std::uint32_t> colors() const noexcept { return colors_; }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::uint32_t k_;
  std::vector<std::uint32_t> colors_;
};

/// I.i.d. uniform edge colors, deterministic per seed. Throws Error{InvalidK}.
EdgeColoring uniform_edge_coloring(const Graph& g, std::uint32_t k, std::uint64_t seed);

/// Crossings between equally colored edges, positions unchanged.
/// Throws Error{ColoringSizeMismatch}.
std::uint64_t monochromatic_crossings(const CrossingReport& report, const EdgeColoring& coloring);

/// total / k: each crossing pair is monochromatic with probability 1/k.
Rational expected_coloring_crossings(const CrossingReport& report, std::uint32_t k);

}  // namespace kplanar
