#include "kplanar/oracles.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "kplanar/error.hpp"

namespace kplanar::oracle {

namespace {

__extension__ using Wide = unsigned __int128;

struct Pair {
  Vertex a1, a2, b1, b2;
  std::uint64_t count;
};

std::uint64_t labeling_count(std::uint32_t k, std::size_t n, std::uint64_t limit) {
  if (k == 0) throw Error(ErrorCode::InvalidK, "k must be at least 1");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (k > 1 && total > limit / k)
      throw Error(ErrorCode::EnumerationTooLarge, std::to_string(k) + "^" + std::to_string(n) + " exceeds limit " +
                                                      std::to_string(limit));
    total *= k;
  }
  if (total > limit) throw Error(ErrorCode::EnumerationTooLarge, "labeling count exceeds limit");
  return total;
}

bool same_unordered(std::uint32_t x1, std::uint32_t x2, std::uint32_t y1, std::uint32_t y2) {
  return (x1 == y1 && x2 == y2) || (x1 == y2 && x2 == y1);
}

}  // namespace

EnumerationResult enumerate_expectation(const CrossingReport& report, const Graph& g, std::uint32_t k,
                                        std::uint64_t limit) {
  const std::size_t n = g.vertex_count();
  const std::uint64_t total = labeling_count(k, n, limit);

  std::vector<Pair> pairs;
  for (const auto& [pair, count] : report.pair_counts) {
    if (pair.second >= g.edge_count()) throw Error(ErrorCode::ReportGraphMismatch, "report edge out of range");
    const Edge& a = g.edge(pair.first);
    const Edge& b = g.edge(pair.second);
    pairs.push_back({a.u, a.v, b.u, b.v, count});
  }

  std::vector<std::uint32_t> labels(n, 0);
  Wide sum = 0;
  std::uint64_t minimum = UINT64_MAX, maximum = 0;
  std::vector<std::uint32_t> argmin(n, 0);
  for (std::uint64_t index = 0; index < total; ++index) {
    std::uint64_t value = 0;
    for (const Pair& p : pairs)
      if (same_unordered(labels[p.a1], labels[p.a2], labels[p.b1], labels[p.b2])) value += p.count;
    sum += value;
    maximum = std::max(maximum, value);
    if (value < minimum) {
      minimum = value;
      argmin = labels;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (++labels[v] < k) break;
      labels[v] = 0;
    }
  }

  EnumerationResult result;
  result.k = k;
  result.n = n;
  const std::array<std::uint64_t, 2> words{static_cast<std::uint64_t>(sum), static_cast<std::uint64_t>(sum >> 64)};
  mpz_class num;
  mpz_import(num.get_mpz_t(), words.size(), -1, sizeof(std::uint64_t), 0, 0, words.data());
  result.mean = Rational(num, to_rational(total).get_num());
  result.mean.canonicalize();
  result.minimum = minimum;
  result.maximum = maximum;
  result.argmin = VertexLabeling(k, std::move(argmin));
  return result;
}

EnumerationResult enumerate_expectation(const Drawing& d, std::uint32_t k, std::uint64_t limit) {
  labeling_count(k, d.graph().vertex_count(), limit);
  return enumerate_expectation(count_crossings_bruteforce(d), d.graph(), k, limit);
}

Rational enumerate_pair_probability(std::uint32_t k, PairPattern pattern) {
  if (k == 0 || k > 64) throw Error(ErrorCode::InvalidK, "pair enumeration supports 1 <= k <= 64");
  // Local vertex ids of the two edges; slots index into the label tuple.
  std::array<std::size_t, 4> slots{};
  std::size_t arity = 0;
  switch (pattern) {
    case PairPattern::DisjointPair: slots = {0, 1, 2, 3}, arity = 4; break;
    case PairPattern::SharedVertex: slots = {0, 1, 0, 2}, arity = 3; break;
    case PairPattern::SameEdge: slots = {0, 1, 0, 1}, arity = 2; break;
  }
  std::array<std::uint32_t, 4> labels{};
  std::uint64_t total = 0, equal = 0;
  while (true) {
    ++total;
    if (same_unordered(labels[slots[0]], labels[slots[1]], labels[slots[2]], labels[slots[3]])) ++equal;
    std::size_t v = 0;
    for (; v < arity; ++v) {
      if (++labels[v] < k) break;
      labels[v] = 0;
    }
    if (v == arity) break;
  }
  Rational r(to_rational(equal).get_num(), to_rational(total).get_num());
  r.canonicalize();
  return r;
}

MinimumResult exhaustive_minimum(const CrossingReport& report, const Graph& g, std::uint32_t k, std::uint64_t limit) {
  EnumerationResult e = enumerate_expectation(report, g, k, limit);
  return {e.minimum, std::move(e.argmin)};
}

MinimumResult exhaustive_minimum(const Drawing& d, std::uint32_t k, std::uint64_t limit) {
  EnumerationResult e = enumerate_expectation(d, k, limit);
  return {e.minimum, std::move(e.argmin)};
}

}  // namespace kplanar::oracle
