// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hgk/shortest_path.h"

#include "hgk/errors.h"

namespace hgk {

DistanceTable::DistanceTable(const AttributedGraph& g)
    : n_(g.node_count()), d_(n_ * n_, kUnreachable) {
  std::vector<NodeIndex> queue(n_);
  for (NodeIndex s = 0; s < n_; ++s) {
    Distance* row = d_.data() + s * n_;
    row[s] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const NodeIndex u = queue[head++];
      for (NodeIndex w : g.neighbors(u)) {
        if (row[w] == kUnreachable) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      }
    }
  }
}

FeatureVector sp_feature_map(const AttributedGraph& g, std::uint32_t block) {
  return sp_feature_map(g, DistanceTable(g), block);
}

FeatureVector sp_feature_map(const AttributedGraph& g, const DistanceTable& distances,
                             std::uint32_t block) {
  if (!g.has_labels()) throw PreconditionError("shortest-path feature map requires labels");
  std::vector<FeatureVector::Entry> entries;
  const auto n = static_cast<NodeIndex>(g.node_count());
  for (NodeIndex u = 0; u < n; ++u) {
    for (NodeIndex v = 0; v < n; ++v) {
      const Distance d = distances(u, v);
      if (u == v || d == kUnreachable) continue;
      entries.emplace_back(FeatureKey::sp(g.label(u), g.label(v), d, block), 1.0);
    }
  }
  return FeatureVector(std::move(entries));
}

}  // namespace hgk
