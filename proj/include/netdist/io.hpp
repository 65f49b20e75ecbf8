#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "netdist/analysis.hpp"
#include "netdist/errors.hpp"
#include "netdist/generators.hpp"
#include "netdist/graph.hpp"
#include "netdist/him.hpp"
#include "netdist/kernel.hpp"
#include "netdist/matrix.hpp"

namespace netdist {

namespace detail {

inline std::string trimmed(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

inline double parse_number(const std::string& field, const std::string& where) {
  const std::string t = trimmed(field);
  double value = 0.0;
  const auto result = std::from_chars(t.data(), t.data() + t.size(), value);
  if (result.ec != std::errc{} || result.ptr != t.data() + t.size())
    throw io_error(where + ": cannot parse number '" + t + "'");
  return value;
}

inline std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && detail::trimmed(lines.back()).empty()) lines.pop_back();
  return lines;
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write '" + path + "'");
  return out;
}

// Shortest representation that round-trips the double exactly.
inline std::string format_exact(double v) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), v);
  return std::string(buffer, result.ptr);
}

inline std::string format_sig9(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.9g", v);
  return buffer;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Adjacency CSV: n rows of n comma-separated decimal weights, no header.

inline Graph read_adjacency_csv(const std::string& path, bool directed) {
  const auto lines = detail::read_lines(path);
  if (lines.empty()) throw io_error(path + ": empty adjacency file");
  const std::size_t n = lines.size();
  Matrix weights(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto fields = detail::split(lines[i], ',');
    if (fields.size() != n)
      throw io_error(path + ": row " + std::to_string(i + 1) + " has " +
                     std::to_string(fields.size()) + " fields, expected " +
                     std::to_string(n));
    for (std::size_t j = 0; j < n; ++j)
      weights(i, j) = detail::parse_number(fields[j], path);
  }
  try {
    return Graph::from_adjacency(std::move(weights), directed);
  } catch (const contract_error& e) {
    throw io_error(path + ": " + e.what());
  }
}

inline void write_adjacency_csv(const std::string& path, const Graph& g) {
  auto out = detail::open_output(path);
  const std::size_t n = g.node_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ',';
      out << detail::format_exact(g.weight(i, j));
    }
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// Edge list TSV: header "#n=<N> directed=<0|1>", then "i<TAB>j<TAB>w" with
// 0-based indices. Unlisted pairs weigh zero; undirected files list each edge
// once.

inline Graph read_edge_tsv(const std::string& path) {
  const auto lines = detail::read_lines(path);
  if (lines.empty()) throw io_error(path + ": empty edge file");
  std::size_t n = 0;
  int directed_flag = -1;
  {
    std::istringstream header(lines.front());
    std::string tag;
    header >> tag;
    unsigned long long parsed_n = 0;
    int parsed_d = -1;
    if (std::sscanf(lines.front().c_str(), "#n=%llu directed=%d", &parsed_n,
                    &parsed_d) != 2 ||
        (parsed_d != 0 && parsed_d != 1))
      throw io_error(path + ": expected header '#n=<N> directed=<0|1>'");
    n = static_cast<std::size_t>(parsed_n);
    directed_flag = parsed_d;
  }
  if (n == 0) throw io_error(path + ": vertex count must be positive");
  Matrix weights(n, n);
  for (std::size_t row = 1; row < lines.size(); ++row) {
    if (detail::trimmed(lines[row]).empty()) continue;
    const auto fields = detail::split(lines[row], '\t');
    if (fields.size() != 3)
      throw io_error(path + ": line " + std::to_string(row + 1) +
                     " needs 'i<TAB>j<TAB>w'");
    const double di = detail::parse_number(fields[0], path);
    const double dj = detail::parse_number(fields[1], path);
    const double w = detail::parse_number(fields[2], path);
    const std::size_t i = static_cast<std::size_t>(di);
    const std::size_t j = static_cast<std::size_t>(dj);
    if (di != static_cast<double>(i) || dj != static_cast<double>(j) || i >= n ||
        j >= n)
      throw io_error(path + ": line " + std::to_string(row + 1) +
                     " has an invalid vertex index");
    weights(i, j) = w;
    if (directed_flag == 0) weights(j, i) = w;
  }
  try {
    return Graph::from_adjacency(std::move(weights), directed_flag == 1);
  } catch (const contract_error& e) {
    throw io_error(path + ": " + e.what());
  }
}

inline void write_edge_tsv(const std::string& path, const Graph& g) {
  auto out = detail::open_output(path);
  const std::size_t n = g.node_count();
  out << "#n=" << n << " directed=" << (g.directed() ? 1 : 0) << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j_begin = g.directed() ? 0 : i + 1;
    for (std::size_t j = j_begin; j < n; ++j) {
      if (i == j) continue;
      const double w = g.weight(i, j);
      if (w != 0.0)
        out << i << '\t' << j << '\t' << detail::format_exact(w) << '\n';
    }
  }
}

// Dispatch by extension: .tsv reads the edge-list format (directedness from
// its header), anything else the adjacency CSV with the caller's flag.
inline Graph load_graph(const std::string& path, bool directed_csv = false) {
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".tsv") == 0)
    return read_edge_tsv(path);
  return read_adjacency_csv(path, directed_csv);
}

// ---------------------------------------------------------------------------
// Labeled square matrices (distance and Gram CSVs): a header row of labels,
// then the matrix rows, nine significant digits. Lines starting with '#' are
// comments.

inline void write_labeled_matrix_csv(std::ostream& out,
                                     const std::vector<std::string>& labels,
                                     const Matrix& values) {
  for (std::size_t j = 0; j < labels.size(); ++j) {
    if (j) out << ',';
    out << labels[j];
  }
  out << '\n';
  for (std::size_t i = 0; i < values.rows(); ++i) {
    for (std::size_t j = 0; j < values.cols(); ++j) {
      if (j) out << ',';
      out << detail::format_sig9(values(i, j));
    }
    out << '\n';
  }
}

inline void write_distance_matrix_csv(const std::string& path,
                                      const std::vector<std::string>& labels,
                                      const DistanceMatrix& distances) {
  auto out = detail::open_output(path);
  write_labeled_matrix_csv(out, labels, distances.values);
}

inline void write_gram_csv(const std::string& path,
                           const std::vector<std::string>& labels,
                           const GramMatrix& gram) {
  auto out = detail::open_output(path);
  out << "#kernel_gamma=" << detail::format_sig9(gram.kernel_gamma)
      << " xi=" << detail::format_sig9(gram.xi)
      << " min_eig=" << detail::format_sig9(gram.min_eigenvalue)
      << " psd=" << (gram.psd ? 1 : 0) << '\n';
  write_labeled_matrix_csv(out, labels, gram.values);
}

struct LabeledMatrix {
  std::vector<std::string> labels;
  Matrix values;
};

inline LabeledMatrix read_labeled_matrix_csv(const std::string& path) {
  auto lines = detail::read_lines(path);
  std::vector<std::string> content;
  for (auto& line : lines)
    if (!line.empty() && line.front() != '#') content.push_back(std::move(line));
  if (content.empty()) throw io_error(path + ": empty matrix file");
  LabeledMatrix result;
  for (auto& label : detail::split(content.front(), ','))
    result.labels.push_back(detail::trimmed(label));
  const std::size_t m = result.labels.size();
  if (content.size() != m + 1)
    throw io_error(path + ": expected " + std::to_string(m) +
                   " matrix rows after the header");
  result.values = Matrix(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto fields = detail::split(content[i + 1], ',');
    if (fields.size() != m)
      throw io_error(path + ": row " + std::to_string(i + 2) +
                     " has the wrong field count");
    for (std::size_t j = 0; j < m; ++j)
      result.values(i, j) = detail::parse_number(fields[j], path);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Row-oriented CSV exports

inline void write_trace_csv(const std::string& path, const ProcessTrace& trace) {
  auto out = detail::open_output(path);
  out << "step,h,im,him\n";
  for (const auto& s : trace.steps)
    out << s.step << ',' << detail::format_sig9(s.h) << ','
        << detail::format_sig9(s.im) << ',' << detail::format_sig9(s.him)
        << '\n';
}

inline void write_family_scan_csv(const std::string& path,
                                  const FamilyScan& scan) {
  auto out = detail::open_output(path);
  out << "sample,h,im,him\n";
  for (std::size_t k = 0; k < scan.reports.size(); ++k) {
    const auto& r = scan.reports[k];
    out << k << ',' << detail::format_sig9(r.h) << ','
        << detail::format_sig9(r.im) << ',' << detail::format_sig9(r.him)
        << '\n';
  }
  out << "#him_mean=" << detail::format_sig9(scan.him_mean) << '\n';
  out << "#him_stddev=" << detail::format_sig9(scan.him_stddev) << '\n';
}

inline void write_embedding_csv(const std::string& path,
                                const std::vector<std::string>& labels,
                                const Embedding& embedding) {
  auto out = detail::open_output(path);
  out << "label,x,y\n";
  const std::size_t dims = embedding.points.cols();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const double x = dims > 0 ? embedding.points(i, 0) : 0.0;
    const double y = dims > 1 ? embedding.points(i, 1) : 0.0;
    out << labels[i] << ',' << detail::format_sig9(x) << ','
        << detail::format_sig9(y) << '\n';
  }
}

inline void write_scatter_csv(const std::string& path,
                              const std::vector<ScatterRow>& rows) {
  auto out = detail::open_output(path);
  out << "mcc_dissim,h,im,him\n";
  for (const auto& r : rows)
    out << detail::format_sig9(r.mcc_dissim) << ',' << detail::format_sig9(r.h)
        << ',' << detail::format_sig9(r.im) << ',' << detail::format_sig9(r.him)
        << '\n';
}

}  // namespace netdist
