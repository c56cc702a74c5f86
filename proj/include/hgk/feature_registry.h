// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HGK_FEATURE_REGISTRY_H_
#define HGK_FEATURE_REGISTRY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <unordered_map>
#include <vector>

#include "hgk/feature_vector.h"
#include "hgk/graph.h"

namespace hgk {

// Dense column indices for the keys occurring in a set of feature vectors,
// assigned 0..size-1 in key order.
class FeatureRegistry {
 public:
  explicit FeatureRegistry(std::span<const FeatureVector> vectors);

  std::size_t size() const { return keys_.size(); }
  std::optional<std::uint32_t> index_of(const FeatureKey& key) const;
  const FeatureKey& key(std::uint32_t index) const { return keys_[index]; }

  // "index<TAB>key" per line with 1-based indices.
  void write(std::ostream& out) const;

 private:
  std::vector<FeatureKey> keys_;
  std::unordered_map<FeatureKey, std::uint32_t, FeatureKeyHash> index_;
};

// Compressed sparse rows over registry columns. Keys unknown to the registry
// are skipped.
struct SparseRows {
  std::size_t columns = 0;
  std::vector<std::size_t> offsets{0};
  std::vector<std::uint32_t> indices;
  std::vector<double> values;

  std::size_t rows() const { return offsets.size() - 1; }

  static SparseRows build(std::span<const FeatureVector> vectors,
                          const FeatureRegistry& registry);
};

// Sparse "index:value" lines (1-based indices, LIBSVM layout) preceded by the
// graph's class label, or 0 when it has none.
void write_feature_file(std::span<const FeatureVector> vectors, const GraphCollection& c,
                        const FeatureRegistry& registry, std::ostream& out);

}  // namespace hgk

#endif  // HGK_FEATURE_REGISTRY_H_
