#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "netdist/errors.hpp"
#include "netdist/matrix.hpp"

namespace netdist {

// A graph on n labeled vertices, stored as its full weight matrix.
// Invariants: weights lie in [0, 1], the diagonal is exactly zero, and an
// undirected graph has an entry-exact symmetric matrix. Vertex identity is
// positional. Treat shared instances as immutable.
class Graph {
 public:
  static Graph empty(std::size_t n, bool directed = false) {
    return Graph(n, directed);
  }

  static Graph complete(std::size_t n, bool directed = false) {
    Graph g(n, directed);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) g.weights_(i, j) = 1.0;
    return g;
  }

  static Graph path(std::size_t n) {
    Graph g(n, false);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      g.weights_(i, i + 1) = 1.0;
      g.weights_(i + 1, i) = 1.0;
    }
    return g;
  }

  static Graph from_adjacency(Matrix weights, bool directed) {
    if (!is_square(weights)) throw contract_error("adjacency matrix must be square");
    Graph g(weights.rows(), directed);
    g.weights_ = std::move(weights);
    g.validate();
    return g;
  }

  std::size_t node_count() const { return n_; }
  bool directed() const { return directed_; }
  const Matrix& weights() const { return weights_; }

  double weight(std::size_t i, std::size_t j) const { return weights_(i, j); }

  // Undirected graphs get the mirrored entry set as well.
  void set_weight(std::size_t i, std::size_t j, double w) {
    if (i == j) throw contract_error("self-loops are not allowed");
    if (!(w >= 0.0 && w <= 1.0)) throw contract_error("weights must lie in [0, 1]");
    weights_(i, j) = w;
    if (!directed_) weights_(j, i) = w;
  }

  bool unweighted() const {
    for (double v : weights_.data())
      if (v != 0.0 && v != 1.0) return false;
    return true;
  }

  double weight_sum() const {
    double s = 0.0;
    for (double v : weights_.data()) s += v;
    return s;
  }

  // Number of links of an unweighted graph; undirected edges counted once.
  std::size_t edge_count() const {
    std::size_t links = 0;
    for (double v : weights_.data()) links += (v != 0.0);
    return directed_ ? links : links / 2;
  }

  bool operator==(const Graph&) const = default;

 private:
  Graph(std::size_t n, bool directed)
      : n_(n), directed_(directed), weights_(n, n) {
    if (n == 0) throw contract_error("a graph needs at least one vertex");
  }

  void validate() const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (weights_(i, i) != 0.0) throw contract_error("diagonal entries must be zero");
      for (std::size_t j = 0; j < n_; ++j) {
        const double w = weights_(i, j);
        if (!(w >= 0.0 && w <= 1.0))
          throw contract_error("weights must lie in [0, 1]");
      }
    }
    if (!directed_ && !is_symmetric(weights_))
      throw contract_error("undirected graphs need an exactly symmetric matrix");
  }

  std::size_t n_;
  bool directed_;
  Matrix weights_;
};

// Undirected double of a directed graph: each vertex splits into an out-copy
// and an in-copy (node order x1_out..xn_out, x1_in..xn_in), and the weight at
// (i, j) lands symmetrically between j_in and i_out. Block form
// ((0, A^T), (A, 0)).
inline Graph directed_to_bipartite(const Graph& g) {
  if (!g.directed()) throw contract_error("directed_to_bipartite needs a directed graph");
  const std::size_t n = g.node_count();
  Matrix block(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double w = g.weight(i, j);
      block(i, n + j) = g.weight(j, i);
      block(n + i, j) = w;
    }
  }
  return Graph::from_adjacency(std::move(block), false);
}

// Ordered list of graphs sharing vertex count and directedness.
struct GraphCollection {
  std::vector<Graph> graphs;
  std::vector<std::string> labels;

  std::size_t size() const { return graphs.size(); }

  void add(Graph g, std::string label = {}) {
    if (label.empty()) label = "g" + std::to_string(graphs.size());
    graphs.push_back(std::move(g));
    labels.push_back(std::move(label));
  }

  void validate() const {
    if (graphs.empty()) throw contract_error("graph collection is empty");
    if (labels.size() != graphs.size())
      throw contract_error("graph collection labels out of sync");
    const std::size_t n = graphs.front().node_count();
    const bool directed = graphs.front().directed();
    for (const Graph& g : graphs)
      if (g.node_count() != n || g.directed() != directed)
        throw contract_error("graph collection must be homogeneous in size and directedness");
  }
};

}  // namespace netdist
