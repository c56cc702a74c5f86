// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hgk/tu_format.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "hgk/errors.h"
#include "hgk/text_format.h"

namespace hgk {
namespace {

struct Row {
  std::size_t line = 0;
  std::vector<std::string_view> fields;
};

// Holds a whole file and its non-blank rows split on commas.
class TuFile {
 public:
  TuFile(const std::filesystem::path& path, bool required) : name_(path.filename().string()) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      if (required) throw IngestionError("missing dataset file: " + path.string());
      return;
    }
    present_ = true;
    text_.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    std::size_t line_no = 0;
    std::string_view rest = text_;
    while (!rest.empty()) {
      const auto eol = rest.find('\n');
      std::string_view line = rest.substr(0, eol);
      rest = eol == std::string_view::npos ? std::string_view{} : rest.substr(eol + 1);
      ++line_no;
      line = trim(line);
      if (line.empty()) continue;
      Row row{line_no, {}};
      while (true) {
        const auto comma = line.find(',');
        row.fields.push_back(trim(line.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        line = line.substr(comma + 1);
      }
      rows_.push_back(std::move(row));
    }
  }

  bool present() const { return present_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::string& name() const { return name_; }

  template <typename T>
  T parse(const Row& row, std::size_t field) const {
    if (field >= row.fields.size()) {
      throw FormatError(name_, row.line, "expected at least " + std::to_string(field + 1) +
                                             " comma-separated values");
    }
    const auto value = parse_number<T>(row.fields[field]);
    if (!value) {
      throw FormatError(name_, row.line,
                        "cannot parse '" + std::string(row.fields[field]) + "'");
    }
    return *value;
  }

 private:
  static std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
  }

  std::string name_;
  bool present_ = false;
  std::string text_;
  std::vector<Row> rows_;
};

}  // namespace

GraphCollection parse_tu_dataset(const std::filesystem::path& directory,
                                 const std::string& name, TuParseStats* stats) {
  const auto file = [&](const char* suffix) { return directory / (name + suffix); };
  const TuFile indicator(file("_graph_indicator.txt"), true);
  const TuFile edges_file(file("_A.txt"), true);
  const TuFile graph_labels(file("_graph_labels.txt"), true);
  const TuFile node_labels(file("_node_labels.txt"), false);
  const TuFile node_attributes(file("_node_attributes.txt"), false);

  const std::size_t graph_count = graph_labels.rows().size();
  const std::size_t total_nodes = indicator.rows().size();

  // Global node id (0-based) -> (graph, local index).
  std::vector<std::uint32_t> node_graph(total_nodes);
  std::vector<NodeIndex> node_local(total_nodes);
  std::vector<std::size_t> graph_sizes(graph_count, 0);
  for (std::size_t i = 0; i < total_nodes; ++i) {
    const auto& row = indicator.rows()[i];
    const auto gid = indicator.parse<long long>(row, 0);
    if (gid < 1 || static_cast<std::size_t>(gid) > graph_count) {
      throw FormatError(indicator.name(), row.line,
                        "graph id " + std::to_string(gid) + " out of range 1.." +
                            std::to_string(graph_count));
    }
    node_graph[i] = static_cast<std::uint32_t>(gid - 1);
    node_local[i] = static_cast<NodeIndex>(graph_sizes[gid - 1]++);
  }

  TuParseStats local_stats;
  std::vector<std::set<Edge>> graph_edges(graph_count);
  std::set<std::pair<std::size_t, std::size_t>> seen_ordered;
  for (const auto& row : edges_file.rows()) {
    long long ends[2];
    for (int k = 0; k < 2; ++k) {
      ends[k] = edges_file.parse<long long>(row, static_cast<std::size_t>(k));
      if (ends[k] < 1 || static_cast<std::size_t>(ends[k]) > total_nodes) {
        throw FormatError(edges_file.name(), row.line,
                          "node id " + std::to_string(ends[k]) + " out of range 1.." +
                              std::to_string(total_nodes));
      }
    }
    const auto u = static_cast<std::size_t>(ends[0] - 1);
    const auto v = static_cast<std::size_t>(ends[1] - 1);
    if (node_graph[u] != node_graph[v]) {
      throw FormatError(edges_file.name(), row.line, "edge joins nodes of different graphs");
    }
    if (u == v) {
      ++local_stats.self_loops_dropped;
      continue;
    }
    // Listing an edge in both directions is the norm; only a repeated
    // ordered pair counts as a duplicate.
    if (!seen_ordered.emplace(u, v).second) {
      ++local_stats.duplicate_edges_dropped;
      continue;
    }
    const auto a = std::min(node_local[u], node_local[v]);
    const auto b = std::max(node_local[u], node_local[v]);
    graph_edges[node_graph[u]].emplace(a, b);
  }

  std::optional<std::vector<Label>> labels;
  if (node_labels.present()) {
    if (node_labels.rows().size() != total_nodes) {
      throw FormatError(node_labels.name(), node_labels.rows().size() + 1,
                        "expected " + std::to_string(total_nodes) + " node labels");
    }
    std::vector<long long> raw(total_nodes);
    for (std::size_t i = 0; i < total_nodes; ++i) {
      raw[i] = node_labels.parse<long long>(node_labels.rows()[i], 0);
    }
    std::map<long long, Label> alphabet;
    for (auto value : raw) alphabet.emplace(value, 0);
    Label next = 0;
    for (auto& [value, id] : alphabet) id = next++;
    labels.emplace(total_nodes);
    for (std::size_t i = 0; i < total_nodes; ++i) (*labels)[i] = alphabet.at(raw[i]);
  }

  std::size_t dim = 0;
  std::vector<double> attributes;
  if (node_attributes.present()) {
    if (node_attributes.rows().size() != total_nodes) {
      throw FormatError(node_attributes.name(), node_attributes.rows().size() + 1,
                        "expected " + std::to_string(total_nodes) + " attribute rows");
    }
    for (std::size_t i = 0; i < total_nodes; ++i) {
      const auto& row = node_attributes.rows()[i];
      if (i == 0) dim = row.fields.size();
      if (row.fields.size() != dim) {
        throw FormatError(node_attributes.name(), row.line,
                          "ragged attribute row: " + std::to_string(row.fields.size()) +
                              " values, expected " + std::to_string(dim));
      }
      for (std::size_t k = 0; k < dim; ++k) {
        attributes.push_back(node_attributes.parse<double>(row, k));
      }
    }
  }

  // Per-graph scatter of node data.
  std::vector<std::vector<Label>> graph_node_labels(graph_count);
  std::vector<std::vector<double>> graph_node_attributes(graph_count);
  for (std::size_t g = 0; g < graph_count; ++g) {
    if (labels) graph_node_labels[g].resize(graph_sizes[g]);
    if (dim > 0) graph_node_attributes[g].resize(graph_sizes[g] * dim);
  }
  for (std::size_t i = 0; i < total_nodes; ++i) {
    const auto g = node_graph[i];
    if (labels) graph_node_labels[g][node_local[i]] = (*labels)[i];
    if (dim > 0) {
      std::copy_n(attributes.begin() + static_cast<std::ptrdiff_t>(i * dim), dim,
                  graph_node_attributes[g].begin() +
                      static_cast<std::ptrdiff_t>(node_local[i] * dim));
    }
  }

  GraphCollection out{name, {}};
  out.graphs.reserve(graph_count);
  for (std::size_t g = 0; g < graph_count; ++g) {
    AttributedGraph graph(graph_sizes[g],
                          std::vector<Edge>(graph_edges[g].begin(), graph_edges[g].end()));
    if (labels) graph = graph.with_labels(std::move(graph_node_labels[g]));
    if (dim > 0) graph = graph.with_attributes(std::move(graph_node_attributes[g]), dim);
    const auto class_label = graph_labels.parse<long long>(graph_labels.rows()[g], 0);
    out.graphs.push_back(graph.with_class_label(static_cast<int>(class_label)));
  }
  if (stats) *stats = local_stats;
  return out;
}

void write_tu_dataset(const GraphCollection& collection,
                      const std::filesystem::path& directory, const std::string& name) {
  collection.validate();
  std::filesystem::create_directories(directory);
  const auto open = [&](const char* suffix) {
    std::ofstream out(directory / (name + suffix), std::ios::binary);
    if (!out) throw IngestionError("cannot write " + (directory / (name + suffix)).string());
    return out;
  };
  bool any_labels = !collection.empty();
  for (const auto& g : collection.graphs) any_labels = any_labels && g.has_labels();
  const bool any_attributes = collection.attribute_dim().has_value();

  auto edges = open("_A.txt");
  auto indicator = open("_graph_indicator.txt");
  auto graph_labels = open("_graph_labels.txt");
  std::ofstream node_labels;
  std::ofstream node_attributes;
  if (any_labels) node_labels = open("_node_labels.txt");
  if (any_attributes) node_attributes = open("_node_attributes.txt");

  std::size_t offset = 1;
  for (std::size_t gi = 0; gi < collection.size(); ++gi) {
    const auto& g = collection.graphs[gi];
    if (any_attributes && !g.has_attributes() && g.node_count() > 0) {
      throw std::invalid_argument("graph " + std::to_string(gi) +
                                  " lacks attributes present elsewhere in the collection");
    }
    for (const auto& [u, v] : g.edges()) {
      edges << offset + u << ", " << offset + v << '\n';
      edges << offset + v << ", " << offset + u << '\n';
    }
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      indicator << gi + 1 << '\n';
      if (any_labels) node_labels << g.label(v) << '\n';
      if (any_attributes) {
        const auto row = g.attribute(v);
        for (std::size_t k = 0; k < row.size(); ++k) {
          if (k) node_attributes << ", ";
          node_attributes << format_double(row[k]);
        }
        node_attributes << '\n';
      }
    }
    graph_labels << g.class_label().value_or(0) << '\n';
    offset += g.node_count();
  }
}

}  // namespace hgk
