#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "netdist/errors.hpp"
#include "netdist/graph.hpp"
#include "netdist/him.hpp"
#include "netdist/parallel.hpp"
#include "netdist/rng.hpp"

namespace netdist {

// ---------------------------------------------------------------------------
// Edge-evolution processes

enum class ProcessKind {
  random_addition,
  random_removal,
  sequential_addition,
  sequential_removal,
  highest_degree_addition,
  highest_degree_removal,
};

inline bool is_addition(ProcessKind kind) {
  return kind == ProcessKind::random_addition ||
         kind == ProcessKind::sequential_addition ||
         kind == ProcessKind::highest_degree_addition;
}

struct ProcessStep {
  std::size_t step = 0;
  double h = 0.0;
  double im = 0.0;
  double him = 0.0;
};

// Distances of each process state back to the starting graph; step 0 is the
// start itself.
struct ProcessTrace {
  ProcessKind kind = ProcessKind::random_addition;
  std::uint64_t seed = 0;
  std::vector<ProcessStep> steps;
};

namespace detail {

inline std::vector<std::pair<std::size_t, std::size_t>> upper_slots(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  slots.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  return slots;
}

// Applies one edit of the process; returns the edited slot.
// Tie-breaking is fixed for determinism: the highest-degree vertex with an
// eligible slot wins (lowest index on equal degree), and the lowest-index
// eligible partner is used.
class ProcessDriver {
 public:
  ProcessDriver(Graph& graph, ProcessKind kind, Rng& rng)
      : graph_(graph), kind_(kind), rng_(rng), n_(graph.node_count()) {
    const auto slots = upper_slots(n_);
    const bool adding = is_addition(kind_);
    for (const auto& slot : slots) {
      const bool present = graph_.weight(slot.first, slot.second) != 0.0;
      if (present != adding) eligible_.push_back(slot);
    }
  }

  std::size_t eligible_count() const { return eligible_.size(); }

  void apply_one() {
    switch (kind_) {
      case ProcessKind::random_addition:
      case ProcessKind::random_removal:
        edit(take_random());
        break;
      case ProcessKind::sequential_addition:
      case ProcessKind::sequential_removal:
        edit(take_sequential());
        break;
      case ProcessKind::highest_degree_addition:
      case ProcessKind::highest_degree_removal:
        edit(take_highest_degree());
        break;
    }
  }

 private:
  using Slot = std::pair<std::size_t, std::size_t>;

  void edit(Slot slot) {
    graph_.set_weight(slot.first, slot.second, is_addition(kind_) ? 1.0 : 0.0);
  }

  Slot take_random() {
    const std::size_t k = static_cast<std::size_t>(rng_.below(eligible_.size()));
    const Slot slot = eligible_[k];
    eligible_[k] = eligible_.back();
    eligible_.pop_back();
    return slot;
  }

  // Earliest eligible slot in row-major order of the upper triangle.
  Slot take_sequential() {
    const bool adding = is_addition(kind_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        const bool present = graph_.weight(i, j) != 0.0;
        if (present != adding) return {i, j};
      }
    throw contract_error("process exhausted: no eligible slot left");
  }

  Slot take_highest_degree() {
    const bool adding = is_addition(kind_);
    std::vector<double> degree(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) degree[i] += graph_.weight(i, j);

    std::vector<std::size_t> order(n_);
    for (std::size_t i = 0; i < n_; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (degree[a] != degree[b]) return degree[a] > degree[b];
      return a < b;
    });

    for (std::size_t v : order) {
      for (std::size_t u = 0; u < n_; ++u) {
        if (u == v) continue;
        const bool present = graph_.weight(v, u) != 0.0;
        if (present != adding) return {std::min(u, v), std::max(u, v)};
      }
    }
    throw contract_error("process exhausted: no eligible slot left");
  }

  Graph& graph_;
  ProcessKind kind_;
  Rng& rng_;
  std::size_t n_;
  std::vector<Slot> eligible_;
};

inline void require_simple_start(const Graph& start) {
  if (start.directed())
    throw contract_error("processes run on undirected graphs");
  if (!start.unweighted())
    throw contract_error("processes run on unweighted graphs");
}

}  // namespace detail

// Runs `steps` single-link edits, recording (H, IM, HIM_xi) of every state
// against the starting graph.
inline ProcessTrace evolve(const Graph& start, ProcessKind kind,
                           std::size_t steps, std::uint64_t seed,
                           double xi = 1.0) {
  detail::require_simple_start(start);
  if (start.node_count() < 2)
    throw contract_error("processes need at least two vertices");

  Graph current = start;
  Rng rng(seed);
  detail::ProcessDriver driver(current, kind, rng);
  if (steps > driver.eligible_count())
    throw contract_error(is_addition(kind)
                             ? "process exhausted: not enough absent links"
                             : "process exhausted: not enough removable links");

  const GammaBar width = gamma_bar(start.node_count());
  const LaplacianSpectrum start_spectrum = graph_spectrum(start);

  ProcessTrace trace;
  trace.kind = kind;
  trace.seed = seed;
  trace.steps.reserve(steps + 1);
  trace.steps.push_back({0, 0.0, 0.0, 0.0});
  for (std::size_t step = 1; step <= steps; ++step) {
    driver.apply_one();
    const double h = hamming_distance(start, current).value;
    const double im =
        im_distance(start_spectrum, graph_spectrum(current), width);
    trace.steps.push_back({step, h, im, combine_him(h, im, xi)});
  }
  return trace;
}

// ---------------------------------------------------------------------------
// Random graph families

enum class FamilyModel {
  barabasi_albert,   // preferential-attachment tree with tunable power
  erdos_renyi,       // G(n, p)
  watts_strogatz,    // ring lattice with rewiring
  power_law_fitness, // fixed edge budget, endpoints drawn by vertex fitness
  k_regular,         // uniform degree
};

struct FamilyParams {
  double ba_power = 1.0;
  double ba_zero_appeal = 1.0;
  double er_edge_probability = 0.5;
  std::size_t ws_neighborhood = 2;
  double ws_rewire_probability = 0.1;
  std::size_t pl_edge_count = 1;
  double pl_exponent = 2.5;
  std::size_t kr_degree = 1;
};

// Parameter draws used by family scans: preferential-attachment power in
// [0.1, 10], link probability in [0.1, 0.9], lattice neighborhood in {1..10}
// with rewiring in [0.1, 0.9], edge budget uniform over all feasible counts
// with exponent in [2.005, 3], and every feasible regular degree.
inline FamilyParams random_family_params(FamilyModel model, std::size_t n,
                                         Rng& rng) {
  FamilyParams p;
  switch (model) {
    case FamilyModel::barabasi_albert:
      p.ba_power = rng.uniform(0.1, 10.0);
      break;
    case FamilyModel::erdos_renyi:
      p.er_edge_probability = rng.uniform(0.1, 0.9);
      break;
    case FamilyModel::watts_strogatz: {
      const std::size_t max_k = std::min<std::size_t>(10, (n - 1) / 2);
      p.ws_neighborhood =
          static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(std::max<std::size_t>(max_k, 1))));
      p.ws_rewire_probability = rng.uniform(0.1, 0.9);
      break;
    }
    case FamilyModel::power_law_fitness: {
      const std::size_t max_edges = n * (n - 1) / 2;
      p.pl_edge_count = static_cast<std::size_t>(
          rng.uniform_int(1, static_cast<std::int64_t>(max_edges)));
      p.pl_exponent = rng.uniform(2.005, 3.0);
      break;
    }
    case FamilyModel::k_regular: {
      std::size_t d = 0;
      do {
        d = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(n - 1)));
      } while ((n * d) % 2 != 0);
      p.kr_degree = d;
      break;
    }
  }
  return p;
}

namespace detail {

inline Graph build_barabasi_albert(std::size_t n, const FamilyParams& p, Rng& rng) {
  Graph g = Graph::empty(n);
  std::vector<double> degree(n, 0.0);
  for (std::size_t v = 1; v < n; ++v) {
    // Attachment weight deg^power + zero_appeal; the appeal keeps isolated
    // seeds reachable.
    double total = 0.0;
    std::vector<double> weight(v);
    for (std::size_t u = 0; u < v; ++u) {
      weight[u] = std::pow(degree[u], p.ba_power) + p.ba_zero_appeal;
      total += weight[u];
    }
    double pick = rng.uniform01() * total;
    std::size_t chosen = v - 1;
    for (std::size_t u = 0; u < v; ++u) {
      pick -= weight[u];
      if (pick <= 0.0) {
        chosen = u;
        break;
      }
    }
    g.set_weight(v, chosen, 1.0);
    degree[v] += 1.0;
    degree[chosen] += 1.0;
  }
  return g;
}

inline Graph build_erdos_renyi(std::size_t n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0))
    throw contract_error("link probability must lie in [0, 1]");
  Graph g = Graph::empty(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) g.set_weight(i, j, 1.0);
  return g;
}

inline Graph build_watts_strogatz(std::size_t n, const FamilyParams& p, Rng& rng) {
  const std::size_t k = p.ws_neighborhood;
  if (k < 1 || 2 * k > n - 1)
    throw contract_error("watts_strogatz neighborhood must satisfy 1 <= k <= (n-1)/2");
  Graph g = Graph::empty(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t d = 1; d <= k; ++d) g.set_weight(i, (i + d) % n, 1.0);
  // One rewiring pass over the lattice edges in construction order.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t d = 1; d <= k; ++d) {
      if (!rng.bernoulli(p.ws_rewire_probability)) continue;
      const std::size_t j = (i + d) % n;
      if (g.weight(i, j) == 0.0) continue;  // already rewired away
      std::vector<std::size_t> candidates;
      candidates.reserve(n);
      for (std::size_t u = 0; u < n; ++u)
        if (u != i && g.weight(i, u) == 0.0) candidates.push_back(u);
      if (candidates.empty()) continue;  // saturated vertex keeps its edge
      const std::size_t u =
          candidates[static_cast<std::size_t>(rng.below(candidates.size()))];
      g.set_weight(i, j, 0.0);
      g.set_weight(i, u, 1.0);
    }
  }
  return g;
}

// Fixed edge budget; both endpoints drawn proportionally to the fitness
// (rank)^(-alpha) with alpha = 1/(exponent - 1). Drawing distinct pairs
// without replacement is done with exponential keys.
inline Graph build_power_law_fitness(std::size_t n, const FamilyParams& p, Rng& rng) {
  const std::size_t max_edges = n * (n - 1) / 2;
  if (p.pl_edge_count < 1 || p.pl_edge_count > max_edges)
    throw contract_error("power-law edge count out of range");
  if (p.pl_exponent <= 2.0)
    throw contract_error("power-law exponent must exceed 2");
  const double alpha = 1.0 / (p.pl_exponent - 1.0);
  std::vector<double> fitness(n);
  for (std::size_t i = 0; i < n; ++i)
    fitness[i] = std::pow(static_cast<double>(i + 1), -alpha);

  struct Keyed {
    double key;
    std::size_t i, j;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(max_edges);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double u = rng.uniform01();
      if (u <= 0.0) u = 0x1.0p-53;
      keyed.push_back({-std::log(u) / (fitness[i] * fitness[j]), i, j});
    }
  std::nth_element(keyed.begin(), keyed.begin() + (p.pl_edge_count - 1),
                   keyed.end(),
                   [](const Keyed& a, const Keyed& b) { return a.key < b.key; });
  Graph g = Graph::empty(n);
  for (std::size_t e = 0; e < p.pl_edge_count; ++e)
    g.set_weight(keyed[e].i, keyed[e].j, 1.0);
  return g;
}

// Circulant d-regular base graph randomized by degree-preserving double-edge
// swaps; regularity is exact by construction.
inline Graph build_k_regular(std::size_t n, const FamilyParams& p, Rng& rng) {
  const std::size_t d = p.kr_degree;
  if (d < 1 || d >= n) throw contract_error("regular degree must satisfy 1 <= d < n");
  if ((n * d) % 2 != 0) throw contract_error("regular graph needs n*d even");

  Graph g = Graph::empty(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t step = 1; step <= d / 2; ++step)
      g.set_weight(i, (i + step) % n, 1.0);
  if (d % 2 == 1)
    for (std::size_t i = 0; i < n / 2; ++i) g.set_weight(i, i + n / 2, 1.0);

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.weight(i, j) != 0.0) edges.emplace_back(i, j);

  const std::size_t attempts = 10 * edges.size();
  for (std::size_t t = 0; t < attempts; ++t) {
    const std::size_t e1 = static_cast<std::size_t>(rng.below(edges.size()));
    const std::size_t e2 = static_cast<std::size_t>(rng.below(edges.size()));
    if (e1 == e2) continue;
    auto [a, b] = edges[e1];
    auto [c, e] = edges[e2];
    if (rng.bernoulli(0.5)) std::swap(c, e);
    if (a == c || a == e || b == c || b == e) continue;
    if (g.weight(a, c) != 0.0 || g.weight(b, e) != 0.0) continue;
    g.set_weight(a, b, 0.0);
    g.set_weight(c, e, 0.0);
    g.set_weight(a, c, 1.0);
    g.set_weight(b, e, 1.0);
    edges[e1] = {std::min(a, c), std::max(a, c)};
    edges[e2] = {std::min(b, e), std::max(b, e)};
  }
  return g;
}

inline Graph build_family(FamilyModel model, std::size_t n,
                          const FamilyParams& params, Rng& rng) {
  if (n < 2) throw contract_error("family samples need at least two vertices");
  switch (model) {
    case FamilyModel::barabasi_albert:
      return build_barabasi_albert(n, params, rng);
    case FamilyModel::erdos_renyi:
      return build_erdos_renyi(n, params.er_edge_probability, rng);
    case FamilyModel::watts_strogatz:
      return build_watts_strogatz(n, params, rng);
    case FamilyModel::power_law_fitness:
      return build_power_law_fitness(n, params, rng);
    case FamilyModel::k_regular:
      return build_k_regular(n, params, rng);
  }
  throw contract_error("unknown family model");
}

}  // namespace detail

struct FamilySample {
  FamilyModel model = FamilyModel::erdos_renyi;
  std::size_t n = 0;
  FamilyParams params;
  std::uint64_t seed = 0;
  Graph graph = Graph::empty(1);
};

inline FamilySample sample_family(FamilyModel model, std::size_t n,
                                  const FamilyParams& params,
                                  std::uint64_t seed) {
  Rng rng(seed);
  return {model, n, params, seed, detail::build_family(model, n, params, rng)};
}

// Distances from the empty graph over `count` independent samples; model
// parameters are redrawn per sample. Sample k runs on stream(seed, k), so the
// scan is reproducible for any thread count.
struct FamilyScan {
  std::vector<DistanceReport> reports;
  double him_mean = 0.0;
  double him_stddev = 0.0;
};

inline FamilyScan family_scan(FamilyModel model, std::size_t n,
                              std::size_t count, std::uint64_t seed,
                              double xi = 1.0, unsigned threads = 0) {
  if (count < 1) throw contract_error("family scans need at least one sample");
  if (n < 2) throw contract_error("family scans need at least two vertices");

  const Graph empty = Graph::empty(n);
  const LaplacianSpectrum empty_spectrum = graph_spectrum(empty);
  const GammaBar width = gamma_bar(n);

  FamilyScan scan;
  scan.reports.resize(count);
  parallel_for(count, threads, [&](std::size_t k) {
    Rng rng = Rng::stream(seed, k);
    const FamilyParams params = random_family_params(model, n, rng);
    const Graph g = detail::build_family(model, n, params, rng);
    const double h = hamming_distance(g, empty).value;
    const double im = im_distance(graph_spectrum(g), empty_spectrum, width);
    scan.reports[k] = {h, im, combine_him(h, im, xi), xi};
  });

  double mean = 0.0;
  for (const auto& r : scan.reports) mean += r.him;
  mean /= static_cast<double>(count);
  double var = 0.0;
  for (const auto& r : scan.reports) var += (r.him - mean) * (r.him - mean);
  scan.him_mean = mean;
  scan.him_stddev = count > 1 ? std::sqrt(var / static_cast<double>(count - 1)) : 0.0;
  return scan;
}

}  // namespace netdist
