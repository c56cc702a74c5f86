// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HGK_SHORTEST_PATH_H_
#define HGK_SHORTEST_PATH_H_

#include <cstdint>
#include <limits>
#include <vector>

#include "hgk/feature_vector.h"
#include "hgk/graph.h"

namespace hgk {

using Distance = std::int32_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

// Unweighted all-pairs shortest-path lengths, one BFS per source.
class DistanceTable {
 public:
  explicit DistanceTable(const AttributedGraph& g);

  std::size_t node_count() const { return n_; }
  // kUnreachable when v cannot be reached from u; 0 on the diagonal.
  Distance operator()(NodeIndex u, NodeIndex v) const { return d_[u * n_ + v]; }

 private:
  std::size_t n_;
  std::vector<Distance> d_;
};

inline DistanceTable apsp(const AttributedGraph& g) { return DistanceTable(g); }

// Shortest-path feature map: for every ordered pair (u, v), u != v, with a
// finite distance, one count of ("sp", l(u), l(v), d_uv).
// Throws PreconditionError when g is unlabeled.
FeatureVector sp_feature_map(const AttributedGraph& g, std::uint32_t block = 0);
FeatureVector sp_feature_map(const AttributedGraph& g, const DistanceTable& distances,
                             std::uint32_t block = 0);

}  // namespace hgk

#endif  // HGK_SHORTEST_PATH_H_
