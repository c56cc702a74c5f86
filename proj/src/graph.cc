// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hgk/graph.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hgk {

AttributedGraph::AttributedGraph(std::size_t node_count, std::vector<Edge> edges)
    : adjacency_(node_count) {
  for (auto& [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      throw std::invalid_argument("edge endpoint out of range: {" +
                                  std::to_string(u) + "," + std::to_string(v) + "}");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at node " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw std::invalid_argument("duplicate edge {" + std::to_string(dup->first) + "," +
                                std::to_string(dup->second) + "}");
  }
  for (const auto& [u, v] : edges) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
  edges_ = std::move(edges);
}

std::span<const NodeIndex> AttributedGraph::neighbors(NodeIndex v) const {
  if (v >= adjacency_.size()) {
    throw std::invalid_argument("node index " + std::to_string(v) +
                                " out of range for graph with " +
                                std::to_string(adjacency_.size()) + " nodes");
  }
  return adjacency_[v];
}

bool AttributedGraph::has_edge(NodeIndex u, NodeIndex v) const {
  const auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

AttributedGraph AttributedGraph::with_labels(std::vector<Label> labels) const {
  if (labels.size() != node_count()) {
    throw std::invalid_argument("expected " + std::to_string(node_count()) +
                                " labels, got " + std::to_string(labels.size()));
  }
  AttributedGraph copy = *this;
  copy.labels_ = std::move(labels);
  copy.labels_set_ = true;
  return copy;
}

AttributedGraph AttributedGraph::without_labels() const {
  AttributedGraph copy = *this;
  copy.labels_.clear();
  copy.labels_set_ = false;
  return copy;
}

AttributedGraph AttributedGraph::with_attributes(std::vector<double> data,
                                                 std::size_t dim) const {
  if (dim == 0) throw std::invalid_argument("attribute dimension must be >= 1");
  if (data.size() != node_count() * dim) {
    throw std::invalid_argument("expected " + std::to_string(node_count() * dim) +
                                " attribute values, got " + std::to_string(data.size()));
  }
  AttributedGraph copy = *this;
  copy.attributes_ = std::move(data);
  copy.attribute_dim_ = dim;
  return copy;
}

AttributedGraph AttributedGraph::with_class_label(std::optional<int> class_label) const {
  AttributedGraph copy = *this;
  copy.class_label_ = class_label;
  return copy;
}

std::optional<std::size_t> GraphCollection::attribute_dim() const {
  for (const auto& g : graphs) {
    if (g.has_attributes()) return g.attribute_dim();
  }
  return std::nullopt;
}

void GraphCollection::validate() const {
  const auto dim = attribute_dim();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    if (g.has_attributes() && g.attribute_dim() != *dim) {
      throw std::invalid_argument("graph " + std::to_string(i) + " has attribute dimension " +
                                  std::to_string(g.attribute_dim()) + ", expected " +
                                  std::to_string(*dim));
    }
  }
}

std::vector<NodeIndex> neighbors(const AttributedGraph& g, NodeIndex v) {
  const auto adj = g.neighbors(v);
  return {adj.begin(), adj.end()};
}

AttributedGraph assign_degree_labels(const AttributedGraph& g, bool force) {
  if (g.has_labels() && !force) return g;
  std::vector<Label> labels(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    labels[v] = static_cast<Label>(g.degree(v));
  }
  return g.with_labels(std::move(labels));
}

GraphCollection assign_degree_labels(const GraphCollection& c, bool force) {
  GraphCollection out{c.name, {}};
  out.graphs.reserve(c.size());
  for (const auto& g : c.graphs) out.graphs.push_back(assign_degree_labels(g, force));
  return out;
}

AttributedGraph permute_nodes(const AttributedGraph& g,
                              std::span<const NodeIndex> permutation) {
  const std::size_t n = g.node_count();
  if (permutation.size() != n) {
    throw std::invalid_argument("permutation size does not match node count");
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(permutation[u], permutation[v]);
  AttributedGraph out(n, std::move(edges));
  if (g.has_labels()) {
    std::vector<Label> labels(n);
    for (NodeIndex v = 0; v < n; ++v) labels[permutation[v]] = g.label(v);
    out = out.with_labels(std::move(labels));
  }
  if (g.has_attributes()) {
    const std::size_t d = g.attribute_dim();
    std::vector<double> data(n * d);
    for (NodeIndex v = 0; v < n; ++v) {
      std::ranges::copy(g.attribute(v), data.begin() + static_cast<std::ptrdiff_t>(permutation[v] * d));
    }
    out = out.with_attributes(std::move(data), d);
  }
  return out.with_class_label(g.class_label());
}

}  // namespace hgk
