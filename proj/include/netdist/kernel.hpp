#pragma once

#include <cmath>
#include <cstddef>

#include "netdist/errors.hpp"
#include "netdist/graph.hpp"
#include "netdist/him.hpp"
#include "netdist/matrix.hpp"
#include "netdist/symmetric_eigen.hpp"

namespace netdist {

// Gaussian kernel over the combined distance. kernel_gamma is the RBF width
// parameter; it has nothing to do with the Lorentz width.
inline double him_kernel(const Graph& a, const Graph& b, double kernel_gamma,
                         double xi = 1.0) {
  if (kernel_gamma <= 0.0) throw contract_error("kernel_gamma must be positive");
  const double d = him_distance(a, b, xi).him;
  return std::exp(-kernel_gamma * d * d);
}

// Pairwise kernel values with a per-dataset positive-semidefiniteness
// diagnostic. The kernel is not PSD in general, so the flag is measured,
// never assumed; callers decide what to do with a non-PSD Gram.
struct GramMatrix {
  Matrix values;
  double kernel_gamma = 1.0;
  double xi = 1.0;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  bool psd = false;
};

inline GramMatrix gram_from_distances(const DistanceMatrix& distances,
                                      double kernel_gamma) {
  if (kernel_gamma <= 0.0) throw contract_error("kernel_gamma must be positive");
  const std::size_t m = distances.size;
  GramMatrix gram;
  gram.values = Matrix(m, m, 1.0);
  gram.kernel_gamma = kernel_gamma;
  gram.xi = distances.xi;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double d = distances.values(i, j);
      const double k = std::exp(-kernel_gamma * d * d);
      gram.values(i, j) = k;
      gram.values(j, i) = k;
    }
  }
  const auto eigenvalues = symmetric_eigenvalues(gram.values);
  gram.min_eigenvalue = eigenvalues.front();
  gram.max_eigenvalue = eigenvalues.back();
  gram.psd = gram.min_eigenvalue >= -1e-8 * gram.max_eigenvalue;
  return gram;
}

inline GramMatrix gram_matrix(const GraphCollection& collection,
                              double kernel_gamma, double xi = 1.0,
                              unsigned threads = 0) {
  if (kernel_gamma <= 0.0) throw contract_error("kernel_gamma must be positive");
  return gram_from_distances(
      distance_matrix(collection, Measure::him, xi, threads), kernel_gamma);
}

}  // namespace netdist
