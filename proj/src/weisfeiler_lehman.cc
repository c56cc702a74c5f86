// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hgk/weisfeiler_lehman.h"

#include <algorithm>

#include "hgk/errors.h"
#include "hgk/random.h"

namespace hgk {

std::size_t WlContext::SignatureHash::operator()(const std::vector<Label>& s) const noexcept {
  std::uint64_t h = s.size();
  for (Label l : s) h = mix64(h ^ static_cast<std::uint64_t>(l));
  return static_cast<std::size_t>(h);
}

Label WlContext::compress(Label own, std::span<const Label> sorted_neighbor_labels) {
  scratch_.clear();
  scratch_.push_back(own);
  scratch_.insert(scratch_.end(), sorted_neighbor_labels.begin(), sorted_neighbor_labels.end());
  if (const auto it = dictionary_.find(scratch_); it != dictionary_.end()) return it->second;
  const auto fresh = static_cast<Label>(dictionary_.size());
  dictionary_.emplace(scratch_, fresh);
  return fresh;
}

std::vector<std::vector<Label>> wl_refine(const AttributedGraph& g, std::uint32_t depth,
                                          WlContext& ctx) {
  if (!g.has_labels()) throw PreconditionError("Weisfeiler-Lehman refinement requires labels");
  const std::size_t n = g.node_count();
  std::vector<std::vector<Label>> rounds;
  rounds.reserve(depth + 1);
  rounds.emplace_back(g.labels().begin(), g.labels().end());
  std::vector<Label> neighborhood;
  for (std::uint32_t i = 1; i <= depth; ++i) {
    const auto& prev = rounds.back();
    std::vector<Label> next(n);
    for (NodeIndex v = 0; v < n; ++v) {
      neighborhood.clear();
      for (NodeIndex w : g.neighbors(v)) neighborhood.push_back(prev[w]);
      std::sort(neighborhood.begin(), neighborhood.end());
      next[v] = ctx.compress(prev[v], neighborhood);
    }
    rounds.push_back(std::move(next));
  }
  return rounds;
}

FeatureVector wl_feature_map(const AttributedGraph& g, std::uint32_t depth, WlContext& ctx,
                             std::uint32_t block) {
  const auto rounds = wl_refine(g, depth, ctx);
  std::vector<FeatureVector::Entry> entries;
  entries.reserve(rounds.size() * g.node_count());
  for (std::uint32_t i = 0; i < rounds.size(); ++i) {
    for (Label l : rounds[i]) entries.emplace_back(FeatureKey::wl(i, l, block), 1.0);
  }
  return FeatureVector(std::move(entries));
}

}  // namespace hgk
