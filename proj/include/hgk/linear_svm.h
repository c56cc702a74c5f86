// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HGK_LINEAR_SVM_H_
#define HGK_LINEAR_SVM_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hgk/feature_registry.h"
#include "hgk/feature_vector.h"

namespace hgk {

struct SvmOptions {
  std::size_t epochs = 10;
  // Appends a constant feature of value 1 (a regularized bias).
  bool bias = true;
  // Returns the average of the iterates over the second half of the epochs
  // instead of the last iterate.
  bool average = true;
};

// One-vs-rest linear classifier trained with Pegasos: stochastic subgradient
// steps on the L2-regularized hinge loss, lambda = 1 / (C n), step 1/(lambda t),
// and projection onto the ball of radius 1/sqrt(lambda).
class LinearSvm {
 public:
  // Trains on rows `rows` of `x` with labels[row] as targets.
  // Throws TrainingError unless at least two classes occur.
  static LinearSvm train(const SparseRows& x, std::span<const std::size_t> rows,
                         std::span<const int> labels, double c, std::uint64_t seed,
                         const SvmOptions& options = {});

  // Per-class decision values of row `row`, in classes() order.
  std::vector<double> scores(const SparseRows& x, std::size_t row) const;
  int predict(const SparseRows& x, std::size_t row) const;

  const std::vector<int>& classes() const { return classes_; }

 private:
  std::vector<int> classes_;
  std::size_t columns_ = 0;
  bool bias_ = true;
  // Column-major by class: weights_[col * classes + c].
  std::vector<double> weights_;
};

// LinearSvm over feature vectors, carrying its own key registry.
class FeatureSvm {
 public:
  FeatureSvm(FeatureRegistry registry, LinearSvm svm)
      : registry_(std::move(registry)), svm_(std::move(svm)) {}

  int predict(const FeatureVector& v) const;
  std::vector<double> scores(const FeatureVector& v) const;

 private:
  FeatureRegistry registry_;
  LinearSvm svm_;
};

FeatureSvm train_linear_svm(std::span<const FeatureVector> features,
                            std::span<const int> labels, double c, std::uint64_t seed,
                            const SvmOptions& options = {});

// v / ||v||; zero vectors are returned unchanged. Linear classification on
// unit vectors matches a cosine-normalized gram matrix.
FeatureVector unit_normalized(const FeatureVector& v);

}  // namespace hgk

#endif  // HGK_LINEAR_SVM_H_
