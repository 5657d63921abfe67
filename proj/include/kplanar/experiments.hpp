#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kplanar/drawing.hpp"
#include "kplanar/graph.hpp"

namespace kplanar {

/// Crossings of a convex-position drawing with vertices in `order`:
/// two chords without common endpoint cross iff their endpoints interleave.
std::uint64_t convex_crossings(const Graph& g, std::span<const Vertex> order);

struct CircularSearchResult {
  Drawing drawing;
  std::vector<Vertex> order;
  std::uint64_t crossings = 0;
};

/// Hill climbing over circular vertex orders with adjacent transpositions.
/// Restart 0 starts from the identity order, restart r > 0 from a shuffle
/// seeded by derive_seed(seed, r), so adding restarts never makes the
/// result worse.
CircularSearchResult improve_circular(const Graph& g, std::size_t restarts, std::uint64_t seed);

struct MidrangeEstimate {
  std::size_t n = 0;
  std::size_t e = 0;
  /// Crossings of the best drawing found; an upper bound on kappa(n, e).
  std::uint64_t crossings_upper = 0;
  /// crossings_upper * n^2 / e^3.
  double scaled = 0.0;
  std::size_t restarts = 0;
  std::uint64_t seed = 0;
};

struct MidrangeRun {
  std::vector<MidrangeEstimate> rows;
  std::vector<std::string> warnings;
};

/// One G(n, m) graph per cell with e = round(n^a); cells outside
/// n < e < C(n,2) are skipped with a warning. Rows sorted by (n, e, seed).
/// Throws Error{InvalidGrid} for empty grids or restarts = 0.
MidrangeRun midrange_experiment(const std::vector<std::size_t>& n_values,
                                const std::vector<double>& density_exponents, std::size_t restarts,
                                std::uint64_t seed);

std::string to_csv(const MidrangeRun& run);

struct RatioRecord {
  std::size_t n = 0;
  std::size_t e = 0;
  std::uint32_t k = 1;
  std::uint64_t cr_upper = 0;
  std::uint64_t crk_upper = 0;
  double ratio = 0.0;
  double band_low = 0.0;
  double band_high = 0.0;
};

/// Best of derandomize and `trials` Monte Carlo labelings on a fixed
/// drawing. Throws Error{PlanarInstance} if the drawing has no crossings.
RatioRecord ratio_for_drawing(const Drawing& d, std::uint32_t k, std::uint64_t trials, std::uint64_t seed);

/// Draws g with improve_circular, then ratio_for_drawing.
RatioRecord ratio_experiment(const Graph& g, std::uint32_t k, std::uint64_t trials, std::uint64_t seed,
                             std::size_t restarts = 10);

std::string to_csv(const std::vector<RatioRecord>& records);

}  // namespace kplanar
