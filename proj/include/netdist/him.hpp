#pragma once

#include <atomic>
#include <cmath>
#include <cstddef>
#include <functional>
#include <mutex>
#include <utility>
#include <vector>

#include "netdist/errors.hpp"
#include "netdist/graph.hpp"
#include "netdist/hamming.hpp"
#include "netdist/matrix.hpp"
#include "netdist/parallel.hpp"
#include "netdist/spectral.hpp"

namespace netdist {

// One graph pair's coordinates in the Hamming / Ipsen-Mikhailov plane plus
// their combination.
struct DistanceReport {
  double h = 0.0;
  double im = 0.0;
  double him = 0.0;
  double xi = 1.0;
};

// sqrt(h^2 + xi im^2) / sqrt(1 + xi). xi = 0 short-circuits so the Hamming
// component comes back untouched.
inline double combine_him(double h, double im, double xi) {
  if (xi < 0.0) throw contract_error("xi must be nonnegative");
  if (xi == 0.0) return h;
  return std::sqrt((h * h + xi * im * im) / (1.0 + xi));
}

inline DistanceReport him_distance(const Graph& a, const Graph& b,
                                   double xi = 1.0) {
  if (xi < 0.0) throw contract_error("xi must be nonnegative");
  const double h = hamming_distance(a, b).value;
  const double im = im_distance(a, b);
  return {h, im, combine_him(h, im, xi), xi};
}

enum class Measure { hamming, ipsen_mikhailov, him };

// Symmetric pairwise distances over a collection, zero diagonal.
struct DistanceMatrix {
  std::size_t size = 0;
  Matrix values;
  Measure measure = Measure::him;
  double xi = 1.0;
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

// Every unordered pair once; spectra are computed once per graph. Pairs run
// in parallel and write disjoint entries, so any thread count produces the
// identical matrix.
inline DistanceMatrix distance_matrix(const GraphCollection& collection,
                                      Measure measure, double xi = 1.0,
                                      unsigned threads = 0,
                                      const ProgressFn& progress = {}) {
  collection.validate();
  if (xi < 0.0) throw contract_error("xi must be nonnegative");
  if (collection.size() < 2)
    throw contract_error("a distance matrix needs at least two graphs");

  const std::size_t m = collection.size();
  const bool spectral = measure != Measure::hamming;
  const Graph& first = collection.graphs.front();

  std::vector<LaplacianSpectrum> spectra;
  GammaBar width;
  if (spectral) {
    if (first.node_count() < 2)
      throw contract_error("the spectral distance needs at least two vertices");
    width = gamma_bar_for(first);
    spectra.resize(m);
    parallel_for(m, threads, [&](std::size_t i) {
      spectra[i] = comparison_spectrum(collection.graphs[i]);
    });
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(m * (m - 1) / 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);

  DistanceMatrix result;
  result.size = m;
  result.values = Matrix(m, m);
  result.measure = measure;
  result.xi = xi;

  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  parallel_for(pairs.size(), threads, [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    const Graph& gi = collection.graphs[i];
    const Graph& gj = collection.graphs[j];
    double value = 0.0;
    switch (measure) {
      case Measure::hamming:
        value = hamming_distance(gi, gj).value;
        break;
      case Measure::ipsen_mikhailov:
        value = im_distance(spectra[i], spectra[j], width);
        break;
      case Measure::him: {
        const double h = hamming_distance(gi, gj).value;
        const double im = im_distance(spectra[i], spectra[j], width);
        value = combine_him(h, im, xi);
        break;
      }
    }
    result.values(i, j) = value;
    result.values(j, i) = value;
    if (progress) {
      const std::size_t finished = done.fetch_add(1) + 1;
      std::lock_guard<std::mutex> lock(progress_mutex);
      progress(finished, pairs.size());
    }
  });
  return result;
}

}  // namespace netdist
