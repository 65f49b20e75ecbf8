#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "netdist/graph.hpp"
#include "netdist/matrix.hpp"
#include "netdist/rng.hpp"

namespace support {

// Two 8-vertex sample graphs used across the suites; their exact distances
// are frozen golden values.
inline netdist::Graph sample8_a() {
  static const std::array<std::array<int, 8>, 8> rows = {{
      {0, 1, 0, 0, 1, 0, 0, 1},
      {1, 0, 0, 0, 0, 0, 1, 1},
      {0, 0, 0, 0, 0, 1, 1, 0},
      {0, 0, 0, 0, 1, 1, 0, 0},
      {1, 0, 0, 1, 0, 0, 0, 0},
      {0, 0, 1, 1, 0, 0, 0, 0},
      {0, 1, 1, 0, 0, 0, 0, 1},
      {1, 1, 0, 0, 0, 0, 1, 0},
  }};
  netdist::Matrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) m(i, j) = rows[i][j];
  return netdist::Graph::from_adjacency(m, false);
}

inline netdist::Graph sample8_b() {
  static const std::array<std::array<int, 8>, 8> rows = {{
      {0, 1, 0, 0, 0, 1, 1, 0},
      {1, 0, 0, 0, 1, 1, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 1, 1},
      {0, 1, 0, 0, 0, 0, 0, 0},
      {1, 1, 0, 0, 0, 0, 0, 0},
      {1, 0, 0, 1, 0, 0, 0, 1},
      {0, 0, 0, 1, 0, 0, 1, 0},
  }};
  netdist::Matrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) m(i, j) = rows[i][j];
  return netdist::Graph::from_adjacency(m, false);
}

// The 3-vertex directed example whose bipartite double is known entry by
// entry.
inline netdist::Graph directed3() {
  netdist::Matrix m(3, 3);
  m(0, 2) = 1;
  m(1, 0) = 1;
  m(1, 2) = 1;
  m(2, 0) = 1;
  return netdist::Graph::from_adjacency(m, true);
}

inline netdist::Graph random_unweighted(std::size_t n, double p,
                                        netdist::Rng& rng) {
  netdist::Graph g = netdist::Graph::empty(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) g.set_weight(i, j, 1.0);
  return g;
}

inline netdist::Graph random_weighted(std::size_t n, double density,
                                      netdist::Rng& rng) {
  netdist::Graph g = netdist::Graph::empty(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.bernoulli(density)) g.set_weight(i, j, rng.uniform01());
  return g;
}

inline netdist::Graph random_directed(std::size_t n, double p,
                                      netdist::Rng& rng) {
  netdist::Graph g = netdist::Graph::empty(n, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && rng.bernoulli(p)) g.set_weight(i, j, 1.0);
  return g;
}

inline netdist::Graph permuted_copy(const netdist::Graph& g, netdist::Rng& rng) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  netdist::Graph out = netdist::Graph::empty(n, g.directed());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && g.weight(i, j) != 0.0)
        out.set_weight(perm[i], perm[j], g.weight(i, j));
  return out;
}

inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace support
