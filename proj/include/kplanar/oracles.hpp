#pragma once

#include <cstdint>

#include "kplanar/crossings.hpp"
#include "kplanar/decompose.hpp"
#include "kplanar/rational.hpp"

// Brute-force ground truth. Nothing here calls into the decomposition
// code; types and subgraph membership are recomputed inline.

namespace kplanar::oracle {

inline constexpr std::uint64_t kDefaultLimit = 100'000'000;

struct EnumerationResult {
  std::uint32_t k = 1;
  std::size_t n = 0;
  Rational mean;
  std::uint64_t minimum = 0;
  std::uint64_t maximum = 0;
  /// First labeling in odometer order attaining the minimum.
  VertexLabeling argmin{1, {}};
};

/// Visits all k^n labelings (vertex 0 is the fastest odometer digit).
/// Throws Error{EnumerationTooLarge | InvalidK}.
EnumerationResult enumerate_expectation(const CrossingReport& report, const Graph& g, std::uint32_t k,
                                        std::uint64_t limit = kDefaultLimit);
EnumerationResult enumerate_expectation(const Drawing& d, std::uint32_t k, std::uint64_t limit = kDefaultLimit);

/// Fraction of label tuples of the pattern's distinct vertices for which
/// the two edges get the same unordered type. Throws Error{InvalidK}
/// outside 1..64.
Rational enumerate_pair_probability(std::uint32_t k, PairPattern pattern);

struct MinimumResult {
  std::uint64_t minimum = 0;
  VertexLabeling labeling{1, {}};
};

MinimumResult exhaustive_minimum(const CrossingReport& report, const Graph& g, std::uint32_t k,
                                 std::uint64_t limit = kDefaultLimit);
MinimumResult exhaustive_minimum(const Drawing& d, std::uint32_t k, std::uint64_t limit = kDefaultLimit);

}  // namespace kplanar::oracle
