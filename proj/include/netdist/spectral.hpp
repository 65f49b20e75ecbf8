#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>
#include <vector>

#include "netdist/errors.hpp"
#include "netdist/graph.hpp"
#include "netdist/hamming.hpp"
#include "netdist/matrix.hpp"
#include "netdist/quadrature.hpp"
#include "netdist/root_finding.hpp"
#include "netdist/symmetric_eigen.hpp"

namespace netdist {

// Sorted Laplacian eigenvalues with the derived vibrational frequencies
// w_i = sqrt(lambda_i). eigenvalues[0] is pinned to exactly zero.
struct LaplacianSpectrum {
  std::vector<double> eigenvalues;
  std::vector<double> frequencies;

  std::size_t node_count() const { return eigenvalues.size(); }
};

// L = D - A with weighted degrees; rows sum to zero.
inline Matrix laplacian(const Graph& g) {
  if (g.directed())
    throw contract_error(
        "laplacian needs an undirected graph; reduce directed graphs through "
        "directed_to_bipartite first");
  const std::size_t n = g.node_count();
  Matrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    double degree = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      degree += g.weight(i, j);
      if (i != j) l(i, j) = -g.weight(i, j);
    }
    l(i, i) = degree;
  }
  return l;
}

// Eigenvalues of a symmetric PSD matrix, ascending. Roundoff-level values are
// snapped to zero so that exact null modes come out identical across
// reorderings; anything significantly negative is rejected.
inline LaplacianSpectrum spectrum(const Matrix& l) {
  LaplacianSpectrum s;
  s.eigenvalues = symmetric_eigenvalues(l);
  const double scale = std::max(1.0, std::abs(s.eigenvalues.back()));
  for (double& v : s.eigenvalues) {
    if (v < -1e-9 * scale)
      throw numeric_error("matrix is not positive semidefinite");
    if (v < 1e-12 * scale) v = 0.0;
  }
  if (s.eigenvalues.front() != 0.0) {
    if (s.eigenvalues.front() > 1e-9 * scale)
      throw numeric_error("smallest eigenvalue of a Laplacian must be zero");
    s.eigenvalues.front() = 0.0;
  }
  s.frequencies.resize(s.eigenvalues.size());
  std::transform(s.eigenvalues.begin(), s.eigenvalues.end(),
                 s.frequencies.begin(), [](double v) { return std::sqrt(v); });
  return s;
}

inline LaplacianSpectrum graph_spectrum(const Graph& g) {
  return spectrum(laplacian(g));
}

// Spectrum of the graph a distance computation actually works on: the graph
// itself when undirected, its bipartite double when directed.
inline LaplacianSpectrum comparison_spectrum(const Graph& g) {
  return g.directed() ? graph_spectrum(directed_to_bipartite(g))
                      : graph_spectrum(g);
}

// ---------------------------------------------------------------------------
// Lorentz spectral densities

// The positive-index vibrational modes entering the density, with integer
// multiplicities. Extremal graphs have closed-form mode sets, which keeps all
// the distance machinery below usable without any eigensolver.
struct SpectralModes {
  std::vector<double> frequencies;
  std::vector<double> weights;

  std::size_t mode_count() const {
    double total = 0.0;
    for (double w : weights) total += w;
    return static_cast<std::size_t>(total + 0.5);
  }
};

inline SpectralModes modes_from_spectrum(const LaplacianSpectrum& s) {
  if (s.node_count() < 2)
    throw contract_error("spectral densities need at least two vertices");
  SpectralModes m;
  // Drop the trivial zero mode; further zero eigenvalues stay.
  m.frequencies.assign(s.frequencies.begin() + 1, s.frequencies.end());
  m.weights.assign(m.frequencies.size(), 1.0);
  return m;
}

inline SpectralModes empty_graph_modes(std::size_t n) {
  if (n < 2) throw contract_error("spectral densities need at least two vertices");
  return {{0.0}, {static_cast<double>(n - 1)}};
}

inline SpectralModes complete_graph_modes(std::size_t n) {
  if (n < 2) throw contract_error("spectral densities need at least two vertices");
  return {{std::sqrt(static_cast<double>(n))}, {static_cast<double>(n - 1)}};
}

inline SpectralModes bipartite_empty_modes(std::size_t n) {
  if (n < 2) throw contract_error("spectral densities need at least two vertices");
  return {{0.0}, {static_cast<double>(2 * n - 1)}};
}

// Modes of the bipartite double of the full directed graph: eigenvalues
// N-2 and N with multiplicity N-1 each plus a single 2N-2. Valid from n = 2
// (where the N-2 block degenerates into a second zero mode).
inline SpectralModes bipartite_complete_modes(std::size_t n) {
  if (n < 2) throw contract_error("spectral densities need at least two vertices");
  const double dn = static_cast<double>(n);
  return {{std::sqrt(dn - 2.0), std::sqrt(dn), std::sqrt(2.0 * dn - 2.0)},
          {dn - 1.0, dn - 1.0, 1.0}};
}

// K such that the summed Lorentz bumps integrate to one over [0, inf):
// each bump contributes pi/2 + atan(w_i / gamma).
inline double lorentz_norm_constant(const SpectralModes& m, double gamma) {
  if (gamma <= 0.0) throw contract_error("gamma must be positive");
  double total = 0.0;
  for (std::size_t i = 0; i < m.frequencies.size(); ++i)
    total += m.weights[i] *
             (std::numbers::pi / 2.0 + std::atan(m.frequencies[i] / gamma));
  return 1.0 / total;
}

// rho(w, gamma) = K sum_i gamma / ((w - w_i)^2 + gamma^2), unit mass on
// [0, inf).
struct LorentzDensity {
  std::vector<double> frequencies;  // the N-1 positive-index modes
  double gamma = 0.0;
  double k_norm = 0.0;

  double operator()(double w) const {
    double sum = 0.0;
    for (double wi : frequencies) {
      const double d = w - wi;
      sum += gamma / (d * d + gamma * gamma);
    }
    return k_norm * sum;
  }
};

inline LorentzDensity lorentz_density(const LaplacianSpectrum& s, double gamma) {
  const SpectralModes m = modes_from_spectrum(s);
  LorentzDensity d;
  d.frequencies = m.frequencies;
  d.gamma = gamma;
  d.k_norm = lorentz_norm_constant(m, gamma);
  return d;
}

namespace detail {

// Integral over [0, inf) of 1 / ((g^2+(w-a)^2)(g^2+(w-b)^2)) for the
// confluent case a == b.
inline double cross_equal(double a, double g) {
  const double g3 = g * g * g;
  return std::numbers::pi / (4.0 * g3) +
         (std::atan(a / g) + g * a / (g * g + a * a)) / (2.0 * g3);
}

// Same integral for a != b. The first term's log is taken through log1p so
// the division by (a - b) stays accurate for close frequencies.
inline double cross_distinct(double a, double b, double g) {
  const double d = a - b;
  const double den = 4.0 * g * g + d * d;
  const double logs = std::log1p(d * (a + b) / (g * g + b * b)) / (d * den);
  const double arcs =
      (std::numbers::pi + std::atan(a / g) + std::atan(b / g)) / (g * den);
  return logs + arcs;
}

inline double cross_frequencies(double a, double b, double g) {
  // Near-coincident modes go through the confluent form evaluated at the
  // midpoint; the integral is even in (a - b) around it, so the switch costs
  // O(|a-b|^2) accuracy.
  if (std::abs(a - b) < 1e-6 * (1.0 + std::abs(a)))
    return cross_equal(0.5 * (a + b), g);
  return cross_distinct(a, b, g);
}

inline double cross_sum(const SpectralModes& x, const SpectralModes& y, double g) {
  double total = 0.0;
  for (std::size_t i = 0; i < x.frequencies.size(); ++i) {
    const double wi = x.weights[i];
    const double fi = x.frequencies[i];
    for (std::size_t j = 0; j < y.frequencies.size(); ++j)
      total += wi * y.weights[j] * cross_frequencies(fi, y.frequencies[j], g);
  }
  return total;
}

// Mode sets indistinguishable at working precision: the expanded distance
// below them would only return cancellation noise, so they count as equal.
inline bool effectively_equal(const SpectralModes& x, const SpectralModes& y) {
  if (x.frequencies.size() != y.frequencies.size()) return false;
  if (x.weights != y.weights) return false;
  for (std::size_t i = 0; i < x.frequencies.size(); ++i) {
    const double a = x.frequencies[i];
    const double b = y.frequencies[i];
    if (std::abs(a - b) > 1e-9 * (1.0 + std::max(a, b))) return false;
  }
  return true;
}

inline bool modes_less(const SpectralModes& x, const SpectralModes& y) {
  if (x.frequencies != y.frequencies) return x.frequencies < y.frequencies;
  return x.weights < y.weights;
}

}  // namespace detail

// The closed form of Appendix-style cross integrals, taking the squared
// frequencies T and U as arguments.
inline double lorentz_cross_integral(double t, double u, double gamma) {
  if (t < 0.0 || u < 0.0)
    throw contract_error("squared frequencies must be nonnegative");
  if (gamma <= 0.0) throw contract_error("gamma must be positive");
  return detail::cross_frequencies(std::sqrt(t), std::sqrt(u), gamma);
}

// Spectral distance: L2 norm of the difference of the two Lorentz densities,
// expanded into pairwise cross integrals. Exact in the mode count, O(n^2).
inline double epsilon_gamma(const SpectralModes& a, const SpectralModes& b,
                            double gamma) {
  if (gamma <= 0.0) throw contract_error("gamma must be positive");
  if (detail::effectively_equal(a, b)) return 0.0;
  // Canonical operand order makes the accumulation bit-for-bit symmetric.
  const SpectralModes* x = &a;
  const SpectralModes* y = &b;
  if (detail::modes_less(*y, *x)) std::swap(x, y);
  const double kx = lorentz_norm_constant(*x, gamma);
  const double ky = lorentz_norm_constant(*y, gamma);
  const double sxx = detail::cross_sum(*x, *x, gamma);
  const double syy = detail::cross_sum(*y, *y, gamma);
  const double sxy = detail::cross_sum(*x, *y, gamma);
  const double e2 =
      gamma * gamma * (kx * kx * sxx + ky * ky * syy - 2.0 * kx * ky * sxy);
  return std::sqrt(std::max(0.0, e2));
}

inline double epsilon_gamma(const LaplacianSpectrum& a,
                            const LaplacianSpectrum& b, double gamma) {
  if (a.node_count() != b.node_count())
    throw contract_error("spectra differ in size");
  return epsilon_gamma(modes_from_spectrum(a), modes_from_spectrum(b), gamma);
}

// Quadrature route for the same quantity; the independent check of the
// closed form. tol is the absolute target on the squared distance.
inline double epsilon_gamma_quadrature(const LaplacianSpectrum& a,
                                       const LaplacianSpectrum& b, double gamma,
                                       double tol = 1e-12) {
  if (a.node_count() != b.node_count())
    throw contract_error("spectra differ in size");
  const LorentzDensity ra = lorentz_density(a, gamma);
  const LorentzDensity rb = lorentz_density(b, gamma);
  auto integrand = [&](double w) {
    const double d = ra(w) - rb(w);
    return d * d;
  };

  std::vector<double> knots;
  knots.push_back(0.0);
  for (double f : ra.frequencies) knots.push_back(f);
  for (double f : rb.frequencies) knots.push_back(f);
  std::sort(knots.begin(), knots.end());
  const double cut = knots.back() + 8.0 * gamma;
  knots.push_back(cut);
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  const double piece_tol = tol / static_cast<double>(knots.size() + 1);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i)
    total += adaptive_simpson(integrand, knots[i], knots[i + 1], piece_tol);
  // (rho_a - rho_b)^2 falls off like 1/w^4, so w^2 * integrand -> 0.
  total += integrate_tail(integrand, cut, 0.0, piece_tol);
  return std::sqrt(std::max(0.0, total));
}

// ---------------------------------------------------------------------------
// Normalization widths

// The width that puts the empty-vs-complete pair at spectral distance one.
struct GammaBar {
  std::size_t node_count = 0;
  double value = 0.0;
  bool directed = false;
};

namespace detail {

inline double solve_unit_distance_width(const SpectralModes& lo_modes,
                                        const SpectralModes& hi_modes) {
  auto objective = [&](double g) {
    return epsilon_gamma(lo_modes, hi_modes, g) - 1.0;
  };
  const Bracket bracket = bracket_decreasing(objective, 0.01);
  return brent(objective, bracket.lo, bracket.hi, 1e-10);
}

inline double cached_gamma_bar(std::size_t n, bool directed) {
  static std::map<std::pair<std::size_t, bool>, double> cache;
  static std::mutex mutex;
  const auto key = std::make_pair(n, directed);
  {
    std::lock_guard<std::mutex> lock(mutex);
    const auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const double value =
      directed ? solve_unit_distance_width(bipartite_empty_modes(n),
                                           bipartite_complete_modes(n))
               : solve_unit_distance_width(empty_graph_modes(n),
                                           complete_graph_modes(n));
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, value);
  return value;
}

}  // namespace detail

inline GammaBar gamma_bar(std::size_t n) {
  if (n < 2) throw contract_error("gamma_bar needs at least two vertices");
  return {n, detail::cached_gamma_bar(n, false), false};
}

// Directed variant, solved on the closed-form extremal bipartite spectra.
// n = 2 works through the same mode formula (the N-2 block degenerates to a
// zero mode there).
inline GammaBar gamma_bar_directed(std::size_t n) {
  if (n < 2) throw contract_error("gamma_bar needs at least two vertices");
  return {n, detail::cached_gamma_bar(n, true), true};
}

inline GammaBar gamma_bar_for(const Graph& g) {
  return g.directed() ? gamma_bar_directed(g.node_count())
                      : gamma_bar(g.node_count());
}

// ---------------------------------------------------------------------------
// The normalized Ipsen-Mikhailov distance

inline double im_distance(const LaplacianSpectrum& a, const LaplacianSpectrum& b,
                          const GammaBar& width) {
  return epsilon_gamma(a, b, width.value);
}

inline double im_distance(const Graph& a, const Graph& b) {
  check_comparable(a, b);
  if (a.node_count() < 2)
    throw contract_error("the spectral distance needs at least two vertices");
  const GammaBar width = gamma_bar_for(a);
  return im_distance(comparison_spectrum(a), comparison_spectrum(b), width);
}

}  // namespace netdist
