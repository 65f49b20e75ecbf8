#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netdist/errors.hpp"
#include "netdist/graph.hpp"
#include "netdist/him.hpp"
#include "netdist/matrix.hpp"
#include "netdist/parallel.hpp"
#include "netdist/rng.hpp"
#include "netdist/symmetric_eigen.hpp"

namespace netdist {

// ---------------------------------------------------------------------------
// Matthews correlation between two unweighted graphs' link indicators

// Counts over the upper-triangle link slots, reading the first graph as the
// prediction and the second as the truth.
struct ConfusionCounts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fn = 0;
};

inline ConfusionCounts confusion_counts(const Graph& prediction,
                                        const Graph& truth) {
  check_comparable(prediction, truth);
  if (prediction.directed())
    throw contract_error("confusion counts are defined for undirected graphs");
  if (!prediction.unweighted() || !truth.unweighted())
    throw contract_error("confusion counts need unweighted graphs");
  ConfusionCounts c;
  const std::size_t n = prediction.node_count();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool p = prediction.weight(i, j) != 0.0;
      const bool t = truth.weight(i, j) != 0.0;
      if (p && t)
        ++c.tp;
      else if (p && !t)
        ++c.fp;
      else if (!p && t)
        ++c.fn;
      else
        ++c.tn;
    }
  return c;
}

// phi coefficient. Degenerate margins use the coin-toss convention (0); the
// identical and complementary cases short-circuit to their exact limits.
inline double mcc_from_counts(const ConfusionCounts& c) {
  if (c.fp == 0 && c.fn == 0) return (c.tp > 0 && c.tn > 0) ? 1.0 : 0.0;
  if (c.tp == 0 && c.tn == 0) return (c.fp > 0 && c.fn > 0) ? -1.0 : 0.0;
  const double tp = static_cast<double>(c.tp);
  const double fp = static_cast<double>(c.fp);
  const double tn = static_cast<double>(c.tn);
  const double fn = static_cast<double>(c.fn);
  const double denominator =
      (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn);
  if (denominator == 0.0) return 0.0;
  return (tp * tn - fp * fn) / std::sqrt(denominator);
}

inline double mcc(const Graph& a, const Graph& b) {
  return mcc_from_counts(confusion_counts(a, b));
}

// (1 - MCC) / 2, the [0, 1] dissimilarity reading of the coefficient.
inline double mcc_dissimilarity(const Graph& a, const Graph& b) {
  return (1.0 - mcc(a, b)) / 2.0;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of small graphs

inline constexpr std::size_t enumeration_cap = 6;

namespace detail {

inline std::size_t slot_index(std::size_t n, std::size_t i, std::size_t j) {
  // Row-major upper-triangle index of (i, j), i < j.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline std::uint64_t graph_bitmask(const Graph& g) {
  const std::size_t n = g.node_count();
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.weight(i, j) != 0.0) mask |= std::uint64_t{1} << slot_index(n, i, j);
  return mask;
}

}  // namespace detail

// All 2^(n(n-1)/2) simple unweighted graphs on n vertices, ordered and
// labeled by their upper-triangle bitmask.
inline GraphCollection enumerate_small(std::size_t n) {
  if (n < 1 || n > enumeration_cap)
    throw contract_error("enumeration supports 1 <= n <= 6");
  const std::size_t slots = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << slots;

  std::size_t digits = 1;
  for (std::uint64_t v = total - 1; v >= 10; v /= 10) ++digits;

  GraphCollection collection;
  collection.graphs.reserve(total);
  collection.labels.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g = Graph::empty(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (mask >> detail::slot_index(n, i, j) & 1) g.set_weight(i, j, 1.0);
    std::string label = std::to_string(mask);
    label.insert(0, digits - label.size(), '0');
    collection.add(std::move(g), "g" + label);
  }
  return collection;
}

// Groups unweighted graphs by the lexicographic-minimum bitmask over all n!
// vertex permutations. Classes come back sorted by canonical form, members in
// input order.
inline std::vector<std::vector<std::size_t>> isomorphism_classes(
    const GraphCollection& collection, std::size_t n) {
  collection.validate();
  if (n < 1 || n > 8)
    throw contract_error("brute-force canonicalization supports n <= 8");
  for (const Graph& g : collection.graphs) {
    if (g.node_count() != n || g.directed() || !g.unweighted())
      throw contract_error("isomorphism classes need undirected unweighted n-vertex graphs");
  }

  const std::size_t slots = n * (n - 1) / 2;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> slot_maps;
  do {
    std::vector<std::size_t> map(slots);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::size_t pi = std::min(perm[i], perm[j]);
        const std::size_t pj = std::max(perm[i], perm[j]);
        map[detail::slot_index(n, i, j)] = detail::slot_index(n, pi, pj);
      }
    slot_maps.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::unordered_map<std::uint64_t, std::vector<std::size_t>> classes;
  for (std::size_t g = 0; g < collection.size(); ++g) {
    const std::uint64_t mask = detail::graph_bitmask(collection.graphs[g]);
    std::uint64_t canonical = ~std::uint64_t{0};
    for (const auto& map : slot_maps) {
      std::uint64_t image = 0;
      std::uint64_t rest = mask;
      while (rest) {
        const int bit = std::countr_zero(rest);
        rest &= rest - 1;
        image |= std::uint64_t{1} << map[static_cast<std::size_t>(bit)];
      }
      canonical = std::min(canonical, image);
      if (canonical == 0) break;
    }
    classes[canonical].push_back(g);
  }

  std::vector<std::pair<std::uint64_t, std::vector<std::size_t>>> ordered(
      classes.begin(), classes.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::vector<std::size_t>> result;
  result.reserve(ordered.size());
  for (auto& entry : ordered) result.push_back(std::move(entry.second));
  return result;
}

// ---------------------------------------------------------------------------
// Classical multidimensional scaling

struct Embedding {
  Matrix points;        // one row per item
  double stress = 0.0;  // sum of squared embedded-vs-input discrepancies
};

inline Embedding classical_mds(const DistanceMatrix& distances,
                               std::size_t dim = 2) {
  const std::size_t m = distances.size;
  if (dim < 1) throw contract_error("embedding dimension must be at least 1");
  if (m < 2) throw contract_error("embedding needs at least two items");
  if (distances.values.rows() != m || distances.values.cols() != m)
    throw contract_error("distance matrix has inconsistent size");
  for (std::size_t i = 0; i < m; ++i) {
    if (distances.values(i, i) != 0.0)
      throw contract_error("distance matrix must have a zero diagonal");
    for (std::size_t j = i + 1; j < m; ++j)
      if (distances.values(i, j) != distances.values(j, i))
        throw contract_error("distance matrix must be symmetric");
  }
  dim = std::min(dim, m);

  // Double centering of squared distances: b_ij = -(s_ij - r_i - r_j + t)/2.
  Matrix squared(m, m);
  std::vector<double> row_mean(m, 0.0);
  double total_mean = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const double d = distances.values(i, j);
      squared(i, j) = d * d;
      row_mean[i] += squared(i, j);
    }
  for (std::size_t i = 0; i < m; ++i) {
    row_mean[i] /= static_cast<double>(m);
    total_mean += row_mean[i];
  }
  total_mean /= static_cast<double>(m);
  Matrix b(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      b(i, j) = -0.5 * (squared(i, j) - row_mean[i] - row_mean[j] + total_mean);

  const EigenDecomposition eigen = symmetric_eigendecomposition(b);

  Embedding embedding;
  embedding.points = Matrix(m, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const std::size_t source = m - 1 - k;  // descending eigenvalues
    const double value = eigen.values[source];
    if (value <= 0.0) continue;  // non-Euclidean directions are truncated
    const double scale = std::sqrt(value);
    for (std::size_t i = 0; i < m; ++i)
      embedding.points(i, k) = scale * eigen.vectors(i, source);
    // Sign convention: the largest-magnitude coordinate of each axis is
    // positive.
    std::size_t argmax = 0;
    for (std::size_t i = 1; i < m; ++i)
      if (std::abs(embedding.points(i, k)) > std::abs(embedding.points(argmax, k)))
        argmax = i;
    if (embedding.points(argmax, k) < 0.0)
      for (std::size_t i = 0; i < m; ++i) embedding.points(i, k) = -embedding.points(i, k);
  }

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      double dist2 = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        const double d = embedding.points(i, k) - embedding.points(j, k);
        dist2 += d * d;
      }
      const double gap = std::sqrt(dist2) - distances.values(i, j);
      embedding.stress += gap * gap;
    }
  return embedding;
}

// ---------------------------------------------------------------------------
// MCC-vs-HIM random pair scatter

struct ScatterRow {
  double mcc_dissim = 0.0;
  double h = 0.0;
  double im = 0.0;
  double him = 0.0;
};

// Random graph pairs of mixed size with all four measures per pair. The pair
// law mixes three relations over Erdos-Renyi bases: link-flip noise at
// moderate density (prob 0.5), link-flip noise followed by a vertex
// relabeling (prob 0.35), and a pure relabeling (prob 0.15).
inline std::vector<ScatterRow> mcc_him_scatter(std::size_t count,
                                               std::size_t min_n,
                                               std::size_t max_n,
                                               std::uint64_t seed,
                                               double xi = 1.0,
                                               unsigned threads = 0) {
  if (count < 1) throw contract_error("scatter needs at least one pair");
  if (min_n < 2 || max_n < min_n)
    throw contract_error("scatter size range must satisfy 2 <= min <= max");

  std::vector<ScatterRow> rows(count);
  parallel_for(count, threads, [&](std::size_t k) {
    Rng rng = Rng::stream(seed, k);
    const std::size_t n = static_cast<std::size_t>(
        rng.uniform_int(static_cast<std::int64_t>(min_n),
                        static_cast<std::int64_t>(max_n)));
    const double relation = rng.uniform01();
    const bool flip = relation < 0.85;
    const bool relabel = relation >= 0.50;
    const double p = flip && !relabel ? rng.uniform(0.4, 0.6) : rng.uniform(0.05, 0.95);

    Graph a = Graph::empty(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng.bernoulli(p)) a.set_weight(i, j, 1.0);

    Graph b = a;
    if (flip) {
      const double q = rng.uniform01();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (rng.bernoulli(q)) b.set_weight(i, j, 1.0 - b.weight(i, j));
    }
    if (relabel) {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      rng.shuffle(perm);
      Graph c = Graph::empty(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (b.weight(i, j) != 0.0) c.set_weight(perm[i], perm[j], 1.0);
      b = std::move(c);
    }

    const DistanceReport report = him_distance(a, b, xi);
    rows[k] = {mcc_dissimilarity(a, b), report.h, report.im, report.him};
  });
  return rows;
}

}  // namespace netdist
