#pragma once

#include <cmath>
#include <cstddef>

#include "netdist/errors.hpp"
#include "netdist/graph.hpp"

namespace netdist {

// Normalized Hamming distance. normalizer carries the divisor that applies on
// the matrices actually compared: N(N-1) for an undirected pair, 2N(N-1) for
// a directed pair (whose mismatches live on the 2N-node bipartite doubles).
struct HammingResult {
  double value;
  double normalizer;
};

inline void check_comparable(const Graph& a, const Graph& b) {
  if (a.node_count() != b.node_count())
    throw contract_error("graphs differ in vertex count");
  if (a.directed() != b.directed())
    throw contract_error("graphs differ in directedness");
}

inline HammingResult hamming_distance(const Graph& a, const Graph& b) {
  check_comparable(a, b);
  const std::size_t n = a.node_count();
  const double slots = static_cast<double>(n) * static_cast<double>(n - 1);
  const double normalizer = a.directed() ? 2.0 * slots : slots;
  if (n == 1) return {0.0, normalizer};  // single-vertex graphs are all equal

  double mismatch = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) mismatch += std::abs(a.weight(i, j) - b.weight(i, j));

  // A directed pair doubles both the mismatch count and the normalizer on its
  // bipartite doubles, so the ratio equals mismatch / (N(N-1)) either way.
  return {mismatch / slots, normalizer};
}

}  // namespace netdist
