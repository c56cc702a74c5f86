// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hgk/gram_matrix.h"

#include <cmath>
#include <stdexcept>

#include "hgk/parallel.h"
#include "hgk/text_format.h"

namespace hgk {

bool GramMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

void GramMatrix::write_csv(std::ostream& out) const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out << ',';
      out << format_double((*this)(i, j));
    }
    out << '\n';
  }
}

GramMatrix gram_matrix(std::span<const FeatureVector> features, int threads) {
  if (features.empty()) throw std::invalid_argument("gram matrix of an empty collection");
  const std::size_t n = features.size();
  GramMatrix k(n);
  parallel_for(n, threads, [&](std::size_t i) {
    for (std::size_t j = i; j < n; ++j) k(i, j) = dot(features[i], features[j]);
  });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) k(i, j) = k(j, i);
  }
  return k;
}

GramMatrix gram_matrix(const GraphCollection& c, const HgkConfig& cfg, int threads) {
  if (c.empty()) throw std::invalid_argument("gram matrix of an empty collection");
  const auto features = hgk_feature_maps(c, cfg, threads);
  return gram_matrix(features, threads);
}

GramMatrix cosine_normalize(const GramMatrix& k) {
  const std::size_t n = k.size();
  GramMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double value;
      if (i == j) {
        value = 1.0;
      } else {
        const double denom = std::sqrt(k(i, i)) * std::sqrt(k(j, j));
        value = denom > 0 ? k(i, j) / denom : 0.0;
      }
      out(i, j) = value;
      out(j, i) = value;
    }
  }
  return out;
}

void write_class_labels(const GraphCollection& c, std::ostream& out) {
  for (const auto& g : c.graphs) {
    if (g.class_label()) out << *g.class_label();
    out << '\n';
  }
}

}  // namespace hgk
