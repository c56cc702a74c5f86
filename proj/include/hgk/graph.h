// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HGK_GRAPH_H_
#define HGK_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hgk {

using NodeIndex = std::uint32_t;
using Label = std::int64_t;
using Edge = std::pair<NodeIndex, NodeIndex>;

// Undirected simple graph with optional discrete node labels and optional
// real node attributes of a shared dimension. Immutable once built; the
// with_* methods return modified copies.
//
// Invariants (checked on construction):
//   - every edge {u, v} has u != v and both endpoints < node_count;
//   - no duplicate edges;
//   - labels, when present, has exactly node_count entries;
//   - attributes, when present, has node_count * attribute_dim entries with
//     attribute_dim >= 1.
class AttributedGraph {
 public:
  AttributedGraph() = default;

  // Throws std::invalid_argument on any invariant violation.
  AttributedGraph(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  // Edges with u < v, sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  // Sorted neighbor list of v. Throws std::invalid_argument for bad v.
  std::span<const NodeIndex> neighbors(NodeIndex v) const;
  std::size_t degree(NodeIndex v) const { return neighbors(v).size(); }
  bool has_edge(NodeIndex u, NodeIndex v) const;

  bool has_labels() const { return labels_set_; }
  std::span<const Label> labels() const { return labels_; }
  Label label(NodeIndex v) const { return labels_[v]; }

  bool has_attributes() const { return attribute_dim_ > 0; }
  std::size_t attribute_dim() const { return attribute_dim_; }
  std::span<const double> attribute(NodeIndex v) const {
    return {attributes_.data() + static_cast<std::size_t>(v) * attribute_dim_,
            attribute_dim_};
  }
  // Row-major node_count x attribute_dim block.
  std::span<const double> attribute_data() const { return attributes_; }

  const std::optional<int>& class_label() const { return class_label_; }

  AttributedGraph with_labels(std::vector<Label> labels) const;
  AttributedGraph without_labels() const;
  AttributedGraph with_attributes(std::vector<double> data, std::size_t dim) const;
  AttributedGraph with_class_label(std::optional<int> class_label) const;

  friend bool operator==(const AttributedGraph&, const AttributedGraph&) = default;

 private:
  std::vector<std::vector<NodeIndex>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<Label> labels_;
  bool labels_set_ = false;
  std::vector<double> attributes_;
  std::size_t attribute_dim_ = 0;
  std::optional<int> class_label_;
};

struct GraphCollection {
  std::string name;
  std::vector<AttributedGraph> graphs;

  // Common attribute dimension, or nullopt when no graph carries attributes.
  std::optional<std::size_t> attribute_dim() const;

  // Throws std::invalid_argument when member graphs disagree on the
  // attribute dimension.
  void validate() const;

  std::size_t size() const { return graphs.size(); }
  bool empty() const { return graphs.empty(); }
};

// Exactly the adjacent nodes of v. Throws std::invalid_argument for bad v.
std::vector<NodeIndex> neighbors(const AttributedGraph& g, NodeIndex v);

// Labels each node with its degree. Existing labels are kept unless `force`.
AttributedGraph assign_degree_labels(const AttributedGraph& g, bool force = false);
GraphCollection assign_degree_labels(const GraphCollection& c, bool force = false);

// Renumbers nodes: node v of g becomes node permutation[v] of the result.
// Labels and attributes travel with their nodes.
AttributedGraph permute_nodes(const AttributedGraph& g,
                              std::span<const NodeIndex> permutation);

}  // namespace hgk

#endif  // HGK_GRAPH_H_
