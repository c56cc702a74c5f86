// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HGK_TU_FORMAT_H_
#define HGK_TU_FORMAT_H_

#include <cstddef>
#include <filesystem>
#include <string>

#include "hgk/graph.h"

namespace hgk {

// Counts of input records dropped while ingesting a TU dataset.
struct TuParseStats {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicate_edges_dropped = 0;
};

// Reads the TU benchmark layout from `directory`:
//   <name>_A.txt                "u, v" global 1-based node ids, one edge per line
//   <name>_graph_indicator.txt  line i holds the 1-based graph id of node i
//   <name>_graph_labels.txt     line j holds the class of graph j
//   <name>_node_labels.txt      optional, one integer per node
//   <name>_node_attributes.txt  optional, comma-separated reals per node
//
// Nodes are renumbered per graph from 0 in file order. Edges listed in both
// directions collapse to one undirected edge; self-loops are dropped. Node
// labels are interned to 0..k-1 in ascending order of their raw values.
//
// Throws IngestionError when a mandatory file is missing and FormatError
// (with a line number) on malformed content.
GraphCollection parse_tu_dataset(const std::filesystem::path& directory,
                                 const std::string& name,
                                 TuParseStats* stats = nullptr);

// Writes `collection` in the layout read by parse_tu_dataset, creating
// `directory` if needed. Graphs without a class label are written as 0.
void write_tu_dataset(const GraphCollection& collection,
                      const std::filesystem::path& directory,
                      const std::string& name);

}  // namespace hgk

#endif  // HGK_TU_FORMAT_H_
