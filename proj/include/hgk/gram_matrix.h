// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HGK_GRAM_MATRIX_H_
#define HGK_GRAM_MATRIX_H_

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "hgk/feature_vector.h"
#include "hgk/graph.h"
#include "hgk/hash_graph_kernel.h"

namespace hgk {

// Dense symmetric matrix of pairwise kernel values, row-major.
class GramMatrix {
 public:
  GramMatrix() = default;
  explicit GramMatrix(std::size_t n) : n_(n), values_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return values_[i * n_ + j]; }
  std::span<const double> values() const { return values_; }

  bool is_symmetric() const;

  // One row per line, comma-separated, shortest round-trip decimals.
  void write_csv(std::ostream& out) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

// K[i][j] = dot(features[i], features[j]); rows are spread over `threads`.
// Throws std::invalid_argument for an empty input.
GramMatrix gram_matrix(std::span<const FeatureVector> features, int threads = 1);

// Featurizes `c` with hgk_feature_maps and takes all pairwise dot products.
GramMatrix gram_matrix(const GraphCollection& c, const HgkConfig& cfg, int threads = 1);

// K'[i][j] = K[i][j] / sqrt(K[i][i] K[j][j]). Rows with a zero diagonal get 0
// off the diagonal and 1 on it.
GramMatrix cosine_normalize(const GramMatrix& k);

// One class label per line; graphs without a class are written as empty lines.
void write_class_labels(const GraphCollection& c, std::ostream& out);

}  // namespace hgk

#endif  // HGK_GRAM_MATRIX_H_
