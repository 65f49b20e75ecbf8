// netdist: compare graphs on a shared vertex set.
//
// Subcommands wrap the library's workflows as file-in / CSV-out operations.
// Exit codes: 0 success, 2 unreadable or malformed input, 3 contract
// violation, 4 internal numerical failure.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "netdist/netdist.hpp"

namespace {

struct RunConfig {
  unsigned threads = 0;  // 0 = NETDIST_THREADS env, then hardware
};

std::string format_fixed7(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.7f", v);
  return buffer;
}

// Expands an --input argument: a directory (all *.csv / *.tsv inside, sorted
// lexicographically) or a comma-separated list of files.
std::vector<std::string> expand_inputs(const std::string& input) {
  namespace fs = std::filesystem;
  std::vector<std::string> paths;
  if (fs::is_directory(input)) {
    for (const auto& entry : fs::directory_iterator(input)) {
      if (!entry.is_regular_file()) continue;
      const std::string ext = entry.path().extension().string();
      if (ext == ".csv" || ext == ".tsv") paths.push_back(entry.path().string());
    }
    std::sort(paths.begin(), paths.end());
  } else {
    for (const auto& piece : netdist::detail::split(input, ',')) {
      const std::string p = netdist::detail::trimmed(piece);
      if (!p.empty()) paths.push_back(p);
    }
  }
  if (paths.empty())
    throw netdist::io_error("no input graphs found in '" + input + "'");
  return paths;
}

netdist::GraphCollection load_collection(const std::string& input, bool directed) {
  netdist::GraphCollection collection;
  for (const auto& path : expand_inputs(input)) {
    netdist::Graph g = netdist::load_graph(path, directed);
    collection.add(std::move(g), std::filesystem::path(path).stem().string());
  }
  return collection;
}

netdist::Measure parse_measure(const std::string& name) {
  if (name == "h" || name == "hamming") return netdist::Measure::hamming;
  if (name == "im" || name == "ipsen-mikhailov")
    return netdist::Measure::ipsen_mikhailov;
  if (name == "him") return netdist::Measure::him;
  throw netdist::contract_error("unknown measure '" + name + "'");
}

netdist::ProcessKind parse_process(const std::string& name) {
  using PK = netdist::ProcessKind;
  if (name == "ra") return PK::random_addition;
  if (name == "rr") return PK::random_removal;
  if (name == "sa") return PK::sequential_addition;
  if (name == "sr") return PK::sequential_removal;
  if (name == "hda") return PK::highest_degree_addition;
  if (name == "hdr") return PK::highest_degree_removal;
  throw netdist::contract_error("unknown process '" + name + "'");
}

netdist::FamilyModel parse_model(const std::string& name) {
  using FM = netdist::FamilyModel;
  if (name == "ba") return FM::barabasi_albert;
  if (name == "er") return FM::erdos_renyi;
  if (name == "ws") return FM::watts_strogatz;
  if (name == "pl") return FM::power_law_fitness;
  if (name == "kr") return FM::k_regular;
  throw netdist::contract_error("unknown family model '" + name + "'");
}

netdist::Graph make_start_graph(const std::string& kind, std::size_t n) {
  if (kind == "empty") return netdist::Graph::empty(n);
  if (kind == "clique") return netdist::Graph::complete(n);
  if (kind == "path") return netdist::Graph::path(n);
  throw netdist::contract_error("unknown start graph '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HIM-family graph distances, kernels, and experiments"};
  app.require_subcommand(1);

  RunConfig config;
  app.add_option("--threads", config.threads,
                 "worker threads (default: NETDIST_THREADS, then hardware)");

  // ---- dist ----
  std::string dist_a, dist_b;
  double dist_xi = 1.0;
  bool dist_directed = false;
  auto* dist = app.add_subcommand("dist", "H, IM and HIM between two graphs");
  dist->add_option("a", dist_a, "first graph file")->required();
  dist->add_option("b", dist_b, "second graph file")->required();
  dist->add_option("--xi", dist_xi, "HIM weight of the spectral component");
  dist->add_flag("--directed", dist_directed, "read adjacency CSVs as directed");

  // ---- matrix ----
  std::string matrix_input, matrix_out, matrix_measure = "him";
  double matrix_xi = 1.0;
  bool matrix_directed = false;
  auto* matrix = app.add_subcommand("matrix", "pairwise distance matrix CSV");
  matrix->add_option("--input", matrix_input, "directory or comma-separated files")
      ->required();
  matrix->add_option("--measure", matrix_measure, "h | im | him");
  matrix->add_option("--xi", matrix_xi, "HIM weight of the spectral component");
  matrix->add_flag("--directed", matrix_directed, "read adjacency CSVs as directed");
  matrix->add_option("--out", matrix_out, "output CSV path")->required();

  // ---- gram ----
  std::string gram_input, gram_out;
  double gram_kernel_gamma = 1.0, gram_xi = 1.0;
  bool gram_directed = false;
  auto* gram = app.add_subcommand("gram", "HIM-kernel Gram matrix CSV");
  gram->add_option("--input", gram_input, "directory or comma-separated files")
      ->required();
  gram->add_option("--kernel-gamma", gram_kernel_gamma, "Gaussian kernel width")
      ->required();
  gram->add_option("--xi", gram_xi, "HIM weight of the spectral component");
  gram->add_flag("--directed", gram_directed, "read adjacency CSVs as directed");
  gram->add_option("--out", gram_out, "output CSV path")->required();

  // ---- gamma ----
  std::size_t gamma_n = 0;
  bool gamma_directed = false;
  auto* gamma = app.add_subcommand("gamma", "normalization width for n vertices");
  gamma->add_option("--n", gamma_n, "vertex count")->required();
  gamma->add_flag("--directed", gamma_directed, "directed variant");

  // ---- simulate ----
  std::string sim_process, sim_start = "empty", sim_out;
  std::size_t sim_n = 0;
  std::int64_t sim_steps = -1;
  std::uint64_t sim_seed = 0;
  double sim_xi = 1.0;
  auto* simulate = app.add_subcommand("simulate", "edge-evolution trace CSV");
  simulate->add_option("--process", sim_process, "ra | rr | sa | sr | hda | hdr")
      ->required();
  simulate->add_option("--n", sim_n, "vertex count")->required();
  simulate->add_option("--start", sim_start, "empty | clique | path");
  simulate->add_option("--steps", sim_steps, "edit count (default: run to exhaustion)");
  simulate->add_option("--seed", sim_seed, "random seed");
  simulate->add_option("--xi", sim_xi, "HIM weight of the spectral component");
  simulate->add_option("--out", sim_out, "output CSV path")->required();

  // ---- family ----
  std::string family_model, family_out;
  std::size_t family_n = 0, family_count = 0;
  std::uint64_t family_seed = 0;
  double family_xi = 1.0;
  auto* family = app.add_subcommand("family", "distance-from-empty scan CSV");
  family->add_option("--model", family_model, "ba | er | ws | pl | kr")->required();
  family->add_option("--n", family_n, "vertex count")->required();
  family->add_option("--count", family_count, "sample count")->required();
  family->add_option("--seed", family_seed, "random seed");
  family->add_option("--xi", family_xi, "HIM weight of the spectral component");
  family->add_option("--out", family_out, "output CSV path")->required();

  // ---- mds ----
  std::string mds_input, mds_out;
  std::size_t mds_dim = 2;
  auto* mds = app.add_subcommand("mds", "classical MDS embedding CSV");
  mds->add_option("--input", mds_input, "distance matrix CSV")->required();
  mds->add_option("--dim", mds_dim, "embedding dimension (1 or 2)");
  mds->add_option("--out", mds_out, "output CSV path")->required();

  // ---- mcc ----
  std::string mcc_a, mcc_b;
  auto* mcc_cmd = app.add_subcommand("mcc", "Matthews correlation of two graphs");
  mcc_cmd->add_option("a", mcc_a, "first graph file")->required();
  mcc_cmd->add_option("b", mcc_b, "second graph file")->required();

  // ---- mcc-scatter ----
  std::string scatter_out;
  std::size_t scatter_count = 0, scatter_min_n = 3, scatter_max_n = 100;
  std::uint64_t scatter_seed = 0;
  double scatter_xi = 1.0;
  auto* scatter = app.add_subcommand("mcc-scatter",
                                     "MCC dissimilarity vs distances on random pairs");
  scatter->add_option("--count", scatter_count, "pair count")->required();
  scatter->add_option("--min-n", scatter_min_n, "smallest vertex count");
  scatter->add_option("--max-n", scatter_max_n, "largest vertex count");
  scatter->add_option("--seed", scatter_seed, "random seed");
  scatter->add_option("--xi", scatter_xi, "HIM weight of the spectral component");
  scatter->add_option("--out", scatter_out, "output CSV path")->required();

  // ---- enumerate ----
  std::size_t enum_n = 0;
  std::string enum_out;
  auto* enumerate = app.add_subcommand("enumerate",
                                       "write all unweighted n-vertex graphs");
  enumerate->add_option("--n", enum_n, "vertex count (at most 6)")->required();
  enumerate->add_option("--out", enum_out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*dist) {
      const netdist::Graph a = netdist::load_graph(dist_a, dist_directed);
      const netdist::Graph b = netdist::load_graph(dist_b, dist_directed);
      const netdist::DistanceReport r = netdist::him_distance(a, b, dist_xi);
      std::cout << "H=" << format_fixed7(r.h) << " IM=" << format_fixed7(r.im)
                << " HIM=" << format_fixed7(r.him) << '\n';
    } else if (*matrix) {
      const auto collection = load_collection(matrix_input, matrix_directed);
      const auto distances = netdist::distance_matrix(
          collection, parse_measure(matrix_measure), matrix_xi, config.threads);
      netdist::write_distance_matrix_csv(matrix_out, collection.labels, distances);
    } else if (*gram) {
      const auto collection = load_collection(gram_input, gram_directed);
      const auto result = netdist::gram_matrix(collection, gram_kernel_gamma,
                                               gram_xi, config.threads);
      netdist::write_gram_csv(gram_out, collection.labels, result);
    } else if (*gamma) {
      const netdist::GammaBar width = gamma_directed
                                          ? netdist::gamma_bar_directed(gamma_n)
                                          : netdist::gamma_bar(gamma_n);
      std::cout << format_fixed7(width.value) << '\n';
    } else if (*simulate) {
      const netdist::Graph start = make_start_graph(sim_start, sim_n);
      const netdist::ProcessKind kind = parse_process(sim_process);
      std::size_t steps;
      if (sim_steps >= 0) {
        steps = static_cast<std::size_t>(sim_steps);
      } else {
        const std::size_t slots = sim_n * (sim_n - 1) / 2;
        const std::size_t present = start.edge_count();
        steps = netdist::is_addition(kind) ? slots - present : present;
      }
      const auto trace = netdist::evolve(start, kind, steps, sim_seed, sim_xi);
      netdist::write_trace_csv(sim_out, trace);
    } else if (*family) {
      const auto scan = netdist::family_scan(parse_model(family_model), family_n,
                                             family_count, family_seed, family_xi,
                                             config.threads);
      netdist::write_family_scan_csv(family_out, scan);
    } else if (*mds) {
      const netdist::LabeledMatrix input = netdist::read_labeled_matrix_csv(mds_input);
      netdist::DistanceMatrix distances;
      distances.size = input.labels.size();
      distances.values = input.values;
      const auto embedding = netdist::classical_mds(distances, mds_dim);
      netdist::write_embedding_csv(mds_out, input.labels, embedding);
    } else if (*mcc_cmd) {
      const netdist::Graph a = netdist::load_graph(mcc_a, false);
      const netdist::Graph b = netdist::load_graph(mcc_b, false);
      const double value = netdist::mcc(a, b);
      std::cout << "MCC=" << format_fixed7(value)
                << " DISSIM=" << format_fixed7((1.0 - value) / 2.0) << '\n';
    } else if (*scatter) {
      const auto rows = netdist::mcc_him_scatter(scatter_count, scatter_min_n,
                                                 scatter_max_n, scatter_seed,
                                                 scatter_xi, config.threads);
      netdist::write_scatter_csv(scatter_out, rows);
    } else if (*enumerate) {
      const auto collection = netdist::enumerate_small(enum_n);
      namespace fs = std::filesystem;
      fs::create_directories(enum_out);
      for (std::size_t k = 0; k < collection.size(); ++k) {
        const fs::path path =
            fs::path(enum_out) / (collection.labels[k] + ".csv");
        netdist::write_adjacency_csv(path.string(), collection.graphs[k]);
      }
    }
  } catch (const netdist::io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const netdist::contract_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const netdist::numeric_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
