// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hgk/feature_registry.h"

#include <algorithm>
#include <stdexcept>

#include "hgk/text_format.h"

namespace hgk {

FeatureRegistry::FeatureRegistry(std::span<const FeatureVector> vectors) {
  for (const auto& v : vectors) {
    for (const auto& [key, w] : v.entries()) keys_.push_back(key);
  }
  std::sort(keys_.begin(), keys_.end());
  keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
  index_.reserve(keys_.size());
  for (std::uint32_t i = 0; i < keys_.size(); ++i) index_.emplace(keys_[i], i);
}

std::optional<std::uint32_t> FeatureRegistry::index_of(const FeatureKey& key) const {
  if (const auto it = index_.find(key); it != index_.end()) return it->second;
  return std::nullopt;
}

void FeatureRegistry::write(std::ostream& out) const {
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    out << i + 1 << '\t' << keys_[i].to_string() << '\n';
  }
}

SparseRows SparseRows::build(std::span<const FeatureVector> vectors,
                             const FeatureRegistry& registry) {
  SparseRows rows;
  rows.columns = registry.size();
  rows.offsets.reserve(vectors.size() + 1);
  for (const auto& v : vectors) {
    for (const auto& [key, w] : v.entries()) {
      if (const auto idx = registry.index_of(key)) {
        rows.indices.push_back(*idx);
        rows.values.push_back(w);
      }
    }
    rows.offsets.push_back(rows.indices.size());
  }
  return rows;
}

void write_feature_file(std::span<const FeatureVector> vectors, const GraphCollection& c,
                        const FeatureRegistry& registry, std::ostream& out) {
  if (vectors.size() != c.size()) {
    throw std::invalid_argument("feature vector count does not match collection size");
  }
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    out << c.graphs[i].class_label().value_or(0);
    for (const auto& [key, w] : vectors[i].entries()) {
      const auto idx = registry.index_of(key);
      if (!idx) continue;
      out << ' ' << *idx + 1 << ':' << format_double(w);
    }
    out << '\n';
  }
}

}  // namespace hgk
