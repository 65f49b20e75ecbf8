#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <set>
#include <vector>

#include "netdist/generators.hpp"
#include "netdist/graph.hpp"
#include "netdist/rng.hpp"
#include "support.hpp"

using Catch::Matchers::WithinAbs;
using netdist::FamilyModel;
using netdist::FamilyParams;
using netdist::Graph;
using netdist::ProcessKind;

TEST_CASE("sequential addition fills the upper triangle row-major") {
  const auto trace =
      netdist::evolve(Graph::empty(5), ProcessKind::sequential_addition, 10, 0);
  REQUIRE(trace.steps.size() == 11);

  // Replay to inspect the edit order directly.
  Graph g = Graph::empty(5);
  const std::pair<std::size_t, std::size_t> expected[] = {
      {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
      {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
  };
  netdist::Rng rng(0);
  for (const auto& slot : expected) {
    // Next sequential edit must hit exactly this slot.
    Graph before = g;
    netdist::detail::ProcessDriver driver(g, ProcessKind::sequential_addition, rng);
    driver.apply_one();
    std::size_t changed = 0;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j)
        if (g.weight(i, j) != before.weight(i, j)) {
          ++changed;
          CHECK(i == slot.first);
          CHECK(j == slot.second);
        }
    CHECK(changed == 1);
  }
}

TEST_CASE("first sequential edit from the empty graph sets both mirrored entries") {
  Graph g = Graph::empty(5);
  netdist::Rng rng(0);
  netdist::detail::ProcessDriver driver(g, ProcessKind::sequential_addition, rng);
  driver.apply_one();
  CHECK(g.weight(0, 1) == 1.0);
  CHECK(g.weight(1, 0) == 1.0);
  CHECK(g.weight_sum() == 2.0);
}

TEST_CASE("random addition runs from empty to the clique") {
  const std::size_t n = 10;
  const std::size_t all = n * (n - 1) / 2;
  const auto trace =
      netdist::evolve(Graph::empty(n), ProcessKind::random_addition, all, 7);
  REQUIRE(trace.steps.size() == all + 1);
  CHECK(trace.steps.front().h == 0.0);
  CHECK(trace.steps.front().im == 0.0);
  CHECK(trace.steps.front().him == 0.0);
  CHECK_THAT(trace.steps.back().h, WithinAbs(1.0, 1e-12));
  CHECK_THAT(trace.steps.back().im, WithinAbs(1.0, 1e-9));
  CHECK_THAT(trace.steps.back().him, WithinAbs(1.0, 1e-9));
}

TEST_CASE("hamming component counts the edits exactly") {
  const std::size_t n = 12;
  const double slots = static_cast<double>(n) * (n - 1);
  for (ProcessKind kind : {ProcessKind::random_addition,
                           ProcessKind::sequential_addition,
                           ProcessKind::highest_degree_addition}) {
    const auto trace = netdist::evolve(Graph::empty(n), kind, 30, 3);
    for (const auto& step : trace.steps)
      CHECK(step.h == 2.0 * static_cast<double>(step.step) / slots);
  }
}

TEST_CASE("removal from the clique mirrors addition's hamming component") {
  const std::size_t n = 9;
  const auto added =
      netdist::evolve(Graph::empty(n), ProcessKind::random_addition, 20, 11);
  const auto removed =
      netdist::evolve(Graph::complete(n), ProcessKind::random_removal, 20, 12);
  for (std::size_t i = 0; i < added.steps.size(); ++i)
    CHECK(added.steps[i].h == removed.steps[i].h);
}

TEST_CASE("traces are strictly monotone in the hamming component") {
  const auto trace = netdist::evolve(Graph::path(8), ProcessKind::random_addition,
                                     10, 5);
  for (std::size_t i = 1; i < trace.steps.size(); ++i)
    CHECK(trace.steps[i].h > trace.steps[i - 1].h);
}

TEST_CASE("identical seeds give identical traces") {
  const auto a = netdist::evolve(Graph::empty(8), ProcessKind::random_addition, 15, 42);
  const auto b = netdist::evolve(Graph::empty(8), ProcessKind::random_addition, 15, 42);
  REQUIRE(a.steps.size() == b.steps.size());
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    CHECK(a.steps[i].h == b.steps[i].h);
    CHECK(a.steps[i].im == b.steps[i].im);
    CHECK(a.steps[i].him == b.steps[i].him);
  }
}

TEST_CASE("highest-degree addition targets the hub first") {
  // Star-ish start: vertex 0 has the highest degree and a free slot.
  Graph g = Graph::empty(5);
  g.set_weight(0, 1, 1.0);
  g.set_weight(0, 2, 1.0);
  g.set_weight(3, 4, 1.0);
  Graph after = g;
  netdist::Rng rng(0);
  netdist::detail::ProcessDriver driver(after, ProcessKind::highest_degree_addition, rng);
  driver.apply_one();
  // Vertex 0 (degree 2) gains its lowest-index missing partner: vertex 3.
  CHECK(after.weight(0, 3) == 1.0);
}

TEST_CASE("highest-degree removal strips the hub first") {
  Graph g = Graph::empty(5);
  g.set_weight(0, 1, 1.0);
  g.set_weight(0, 2, 1.0);
  g.set_weight(0, 3, 1.0);
  g.set_weight(1, 2, 1.0);
  Graph after = g;
  netdist::Rng rng(0);
  netdist::detail::ProcessDriver driver(after, ProcessKind::highest_degree_removal, rng);
  driver.apply_one();
  // Vertex 0 (degree 3) loses its lowest-index neighbor: vertex 1.
  CHECK(after.weight(0, 1) == 0.0);
  CHECK(after.weight(0, 2) == 1.0);
}

TEST_CASE("saturated hubs fall through to the next vertex") {
  // Vertex 0 is connected to everyone; additions must move elsewhere.
  Graph g = Graph::empty(4);
  g.set_weight(0, 1, 1.0);
  g.set_weight(0, 2, 1.0);
  g.set_weight(0, 3, 1.0);
  Graph after = g;
  netdist::Rng rng(0);
  netdist::detail::ProcessDriver driver(after, ProcessKind::highest_degree_addition, rng);
  driver.apply_one();
  CHECK(after.weight(1, 2) == 1.0);
}

TEST_CASE("exhausted processes are rejected") {
  CHECK_THROWS_AS(netdist::evolve(Graph::empty(4), ProcessKind::random_removal, 1, 0),
                  netdist::contract_error);
  CHECK_THROWS_AS(netdist::evolve(Graph::complete(4), ProcessKind::random_addition, 1, 0),
                  netdist::contract_error);
  CHECK_THROWS_AS(netdist::evolve(Graph::empty(4), ProcessKind::random_addition, 7, 0),
                  netdist::contract_error);
}

TEST_CASE("processes demand simple undirected unweighted starts") {
  CHECK_THROWS_AS(
      netdist::evolve(Graph::empty(4, true), ProcessKind::random_addition, 1, 0),
      netdist::contract_error);
  Graph weighted = Graph::empty(4);
  weighted.set_weight(0, 1, 0.5);
  CHECK_THROWS_AS(
      netdist::evolve(weighted, ProcessKind::random_addition, 1, 0),
      netdist::contract_error);
}

TEST_CASE("erdos-renyi respects its probability limits") {
  FamilyParams p;
  p.er_edge_probability = 0.0;
  const auto empty = netdist::sample_family(FamilyModel::erdos_renyi, 50, p, 1);
  CHECK(empty.graph.weight_sum() == 0.0);
  p.er_edge_probability = 1.0;
  const auto full = netdist::sample_family(FamilyModel::erdos_renyi, 20, p, 1);
  CHECK(full.graph.edge_count() == 190);
}

TEST_CASE("erdos-renyi edge counts match the binomial law") {
  // Mean edge count of G(100, 0.5) is 2475 with sigma ~= 35.2; the mean over
  // 1000 samples stays within three standard errors.
  FamilyParams p;
  p.er_edge_probability = 0.5;
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed)
    total += static_cast<double>(
        netdist::sample_family(FamilyModel::erdos_renyi, 100, p, seed).graph.edge_count());
  const double mean = total / 1000.0;
  const double sigma = std::sqrt(4950.0 * 0.25);
  CHECK_THAT(mean, WithinAbs(2475.0, 3.0 * sigma / std::sqrt(1000.0)));
}

TEST_CASE("regular samples are exactly regular") {
  for (std::size_t d : {1, 3, 6, 9}) {
    FamilyParams p;
    p.kr_degree = d;
    const auto sample = netdist::sample_family(FamilyModel::k_regular, 10, p, 3);
    for (std::size_t i = 0; i < 10; ++i) {
      double degree = 0.0;
      for (std::size_t j = 0; j < 10; ++j) degree += sample.graph.weight(i, j);
      CHECK(degree == static_cast<double>(d));
    }
  }
  FamilyParams odd;
  odd.kr_degree = 3;
  CHECK_THROWS_AS(netdist::sample_family(FamilyModel::k_regular, 9, odd, 0),
                  netdist::contract_error);
}

TEST_CASE("regular samples vary with the seed") {
  FamilyParams p;
  p.kr_degree = 3;
  const auto a = netdist::sample_family(FamilyModel::k_regular, 16, p, 1);
  const auto b = netdist::sample_family(FamilyModel::k_regular, 16, p, 2);
  CHECK(a.graph.weights() != b.graph.weights());
}

TEST_CASE("barabasi-albert samples are trees") {
  FamilyParams p;
  p.ba_power = 2.0;
  const auto sample = netdist::sample_family(FamilyModel::barabasi_albert, 40, p, 9);
  CHECK(sample.graph.edge_count() == 39);
}

TEST_CASE("watts-strogatz keeps the lattice edge count") {
  FamilyParams p;
  p.ws_neighborhood = 3;
  p.ws_rewire_probability = 0.5;
  const auto sample = netdist::sample_family(FamilyModel::watts_strogatz, 30, p, 4);
  CHECK(sample.graph.edge_count() == 90);
  p.ws_neighborhood = 20;
  CHECK_THROWS_AS(netdist::sample_family(FamilyModel::watts_strogatz, 30, p, 4),
                  netdist::contract_error);
}

TEST_CASE("power-law samples hit the requested edge budget") {
  FamilyParams p;
  p.pl_edge_count = 55;
  p.pl_exponent = 2.3;
  const auto sample = netdist::sample_family(FamilyModel::power_law_fitness, 25, p, 6);
  CHECK(sample.graph.edge_count() == 55);
  p.pl_edge_count = 1000;
  CHECK_THROWS_AS(netdist::sample_family(FamilyModel::power_law_fitness, 25, p, 6),
                  netdist::contract_error);
}

TEST_CASE("family scans are deterministic and in range") {
  const auto a = netdist::family_scan(FamilyModel::erdos_renyi, 20, 24, 5, 1.0, 1);
  const auto b = netdist::family_scan(FamilyModel::erdos_renyi, 20, 24, 5, 1.0, 4);
  REQUIRE(a.reports.size() == 24);
  for (std::size_t i = 0; i < 24; ++i) {
    CHECK(a.reports[i].him == b.reports[i].him);
    CHECK(a.reports[i].h >= 0.0);
    CHECK(a.reports[i].h <= 1.0);
    CHECK(a.reports[i].im >= 0.0);
    CHECK(a.reports[i].im <= 1.0 + 1e-6);
    CHECK(a.reports[i].him >= 0.0);
    CHECK(a.reports[i].him <= 1.0 + 1e-6);
  }
  CHECK(a.him_mean == b.him_mean);
  CHECK(a.him_stddev == b.him_stddev);
}

TEST_CASE("addition beats removal on mid-process structural change") {
  // Sub-scale version of the addition-vs-removal asymmetry: at the half point
  // the empty-to-clique walk has drifted structurally further than the
  // clique-to-empty walk.
  const std::size_t n = 15;
  const std::size_t half = n * (n - 1) / 4;
  double add_im = 0.0, remove_im = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    add_im += netdist::evolve(Graph::empty(n), ProcessKind::random_addition,
                              half, seed).steps.back().im;
    remove_im += netdist::evolve(Graph::complete(n), ProcessKind::random_removal,
                                 half, seed).steps.back().im;
  }
  CHECK(add_im > remove_im);
}
