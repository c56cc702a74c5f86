// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hgk/feature_vector.h"

#include <algorithm>
#include <stdexcept>

#include "hgk/random.h"
#include "hgk/text_format.h"

namespace hgk {

std::string FeatureKey::to_string() const {
  std::string out;
  if (block != 0) out += "i" + std::to_string(block) + ":";
  if (kind == FeatureKind::kWl) {
    out += "wl," + std::to_string(depth) + "," + std::to_string(first);
  } else {
    out += "sp," + std::to_string(first) + "," + std::to_string(second) + "," +
           std::to_string(distance);
  }
  return out;
}

std::size_t FeatureKeyHash::operator()(const FeatureKey& k) const noexcept {
  std::uint64_t h = mix64(k.block * 4ULL + static_cast<std::uint64_t>(k.kind));
  h = mix64(h ^ k.depth);
  h = mix64(h ^ static_cast<std::uint64_t>(k.first));
  h = mix64(h ^ static_cast<std::uint64_t>(k.second));
  h = mix64(h ^ static_cast<std::uint64_t>(k.distance));
  return static_cast<std::size_t>(h);
}

FeatureVector::FeatureVector(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (!entries_.empty() && entries_.back().first == e.first) {
      entries_.back().second += e.second;
    } else {
      entries_.push_back(e);
    }
  }
  std::erase_if(entries_, [](const Entry& e) { return e.second == 0.0; });
}

double FeatureVector::at(const FeatureKey& key) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), key,
      [](const Entry& e, const FeatureKey& k) { return e.first < k; });
  return it != entries_.end() && it->first == key ? it->second : 0.0;
}

double FeatureVector::squared_norm() const {
  double sum = 0;
  for (const auto& [key, w] : entries_) sum += w * w;
  return sum;
}

FeatureVector FeatureVector::scaled(double factor) const {
  FeatureVector out;
  if (factor == 0.0) return out;
  out.entries_ = entries_;
  for (auto& [key, w] : out.entries_) w *= factor;
  return out;
}

FeatureVector FeatureVector::concatenated(const FeatureVector& other) const {
  FeatureVector out;
  out.entries_.reserve(entries_.size() + other.entries_.size());
  std::merge(entries_.begin(), entries_.end(), other.entries_.begin(), other.entries_.end(),
             std::back_inserter(out.entries_),
             [](const Entry& a, const Entry& b) { return a.first < b.first; });
  const auto clash = std::adjacent_find(
      out.entries_.begin(), out.entries_.end(),
      [](const Entry& a, const Entry& b) { return a.first == b.first; });
  if (clash != out.entries_.end()) {
    throw std::invalid_argument("concatenated vectors share key " + clash->first.to_string());
  }
  return out;
}

FeatureVector FeatureVector::restricted_to_wl_depth(std::uint32_t max_depth) const {
  FeatureVector out;
  out.entries_.reserve(entries_.size());
  for (const auto& e : entries_) {
    if (e.first.kind != FeatureKind::kWl || e.first.depth <= max_depth) {
      out.entries_.push_back(e);
    }
  }
  return out;
}

std::string FeatureVector::to_text() const {
  std::vector<std::pair<std::string, double>> lines;
  lines.reserve(entries_.size());
  for (const auto& [key, w] : entries_) lines.emplace_back(key.to_string(), w);
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& [key, w] : lines) {
    out += key;
    out += '\t';
    out += format_double(w);
    out += '\n';
  }
  return out;
}

FeatureVector FeatureCounter::freeze() const {
  return FeatureVector(std::vector<FeatureVector::Entry>(counts_.begin(), counts_.end()));
}

double dot(const FeatureVector& u, const FeatureVector& v) {
  const auto a = u.entries();
  const auto b = v.entries();
  double sum = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      ++i;
    } else if (b[j].first < a[i].first) {
      ++j;
    } else {
      sum += a[i++].second * b[j++].second;
    }
  }
  return sum;
}

}  // namespace hgk
