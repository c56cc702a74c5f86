// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HGK_FEATURE_VECTOR_H_
#define HGK_FEATURE_VECTOR_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hgk/graph.h"

namespace hgk {

enum class FeatureKind : std::uint8_t { kWl = 0, kSp = 1 };

// Structural index of one feature dimension.
//   WL: (depth, label)                  rendered "wl,<depth>,<label>"
//   SP: (label_u, label_v, distance)    rendered "sp,<lu>,<lv>,<d>"
// A non-zero block marks the hash-kernel iteration the feature belongs to
// and renders as an "i<block>:" prefix. Keys order by block first, so the
// blocks of a concatenated map stay contiguous.
struct FeatureKey {
  std::uint32_t block = 0;
  FeatureKind kind = FeatureKind::kWl;
  std::uint32_t depth = 0;
  Label first = 0;
  Label second = 0;
  std::int64_t distance = 0;

  static FeatureKey wl(std::uint32_t depth, Label label, std::uint32_t block = 0) {
    return {block, FeatureKind::kWl, depth, label, 0, 0};
  }
  static FeatureKey sp(Label u, Label v, std::int64_t distance, std::uint32_t block = 0) {
    return {block, FeatureKind::kSp, 0, u, v, distance};
  }

  std::string to_string() const;

  auto operator<=>(const FeatureKey&) const = default;
};

struct FeatureKeyHash {
  std::size_t operator()(const FeatureKey& k) const noexcept;
};

// Sparse real vector over FeatureKeys, stored sorted by key with no zero
// entries.
class FeatureVector {
 public:
  using Entry = std::pair<FeatureKey, double>;

  FeatureVector() = default;
  // Sorts, merges repeated keys by summation and drops zeros.
  explicit FeatureVector(std::vector<Entry> entries);

  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // 0 when absent.
  double at(const FeatureKey& key) const;

  double squared_norm() const;
  FeatureVector scaled(double factor) const;

  // Key-disjoint union. Throws std::invalid_argument if a key occurs in both.
  FeatureVector concatenated(const FeatureVector& other) const;

  // Keeps SP features and WL features of depth <= max_depth.
  FeatureVector restricted_to_wl_depth(std::uint32_t max_depth) const;

  // One "key<TAB>weight" line per entry in key order.
  std::string to_text() const;

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;

 private:
  std::vector<Entry> entries_;
};

// Accumulates counts before freezing them into a FeatureVector.
class FeatureCounter {
 public:
  void add(const FeatureKey& key, double weight = 1.0) { counts_[key] += weight; }
  FeatureVector freeze() const;

 private:
  std::unordered_map<FeatureKey, double, FeatureKeyHash> counts_;
};

double dot(const FeatureVector& u, const FeatureVector& v);

}  // namespace hgk

#endif  // HGK_FEATURE_VECTOR_H_
