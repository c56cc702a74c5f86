// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HGK_WEISFEILER_LEHMAN_H_
#define HGK_WEISFEILER_LEHMAN_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "hgk/feature_vector.h"
#include "hgk/graph.h"

namespace hgk {

// Injective relabeling dictionary shared by every graph of one featurization
// run: (old label, sorted neighbor labels) -> fresh label. Fresh labels are
// handed out from a counter starting at 0 in first-seen order, so identical
// input sequences yield identical labels. Not thread-safe; give each
// concurrent task its own context.
class WlContext {
 public:
  Label compress(Label own, std::span<const Label> sorted_neighbor_labels);
  std::size_t size() const { return dictionary_.size(); }

 private:
  struct SignatureHash {
    std::size_t operator()(const std::vector<Label>& s) const noexcept;
  };
  std::unordered_map<std::vector<Label>, Label, SignatureHash> dictionary_;
  std::vector<Label> scratch_;
};

// Node labels after each refinement round: result[i][v] is the round-i label
// of v, with round 0 the input labels. Throws PreconditionError when g is
// unlabeled.
std::vector<std::vector<Label>> wl_refine(const AttributedGraph& g, std::uint32_t depth,
                                          WlContext& ctx);

// Weisfeiler-Lehman subtree feature map: counts of every round-i label for
// i = 0..depth, keyed ("wl", i, label). `block` tags the keys for use inside
// a concatenated hash-kernel map.
FeatureVector wl_feature_map(const AttributedGraph& g, std::uint32_t depth, WlContext& ctx,
                             std::uint32_t block = 0);

}  // namespace hgk

#endif  // HGK_WEISFEILER_LEHMAN_H_
