// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hgk/linear_svm.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hgk/errors.h"
#include "hgk/random.h"

namespace hgk {

LinearSvm LinearSvm::train(const SparseRows& x, std::span<const std::size_t> rows,
                           std::span<const int> labels, double c, std::uint64_t seed,
                           const SvmOptions& options) {
  if (!(c > 0)) throw std::invalid_argument("C must be positive");
  if (rows.empty()) throw TrainingError("no training rows");

  LinearSvm model;
  for (std::size_t r : rows) model.classes_.push_back(labels[r]);
  std::sort(model.classes_.begin(), model.classes_.end());
  model.classes_.erase(std::unique(model.classes_.begin(), model.classes_.end()),
                       model.classes_.end());
  if (model.classes_.size() < 2) {
    throw TrainingError("training data contains a single class");
  }
  model.columns_ = x.columns;
  model.bias_ = options.bias;

  const std::size_t k = model.classes_.size();
  const std::size_t dims = x.columns + (options.bias ? 1 : 0);
  const double bias_value = options.bias ? 1.0 : 0.0;
  std::vector<std::size_t> target(rows.size());
  std::vector<double> row_norm2(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t r = rows[i];
    target[i] = static_cast<std::size_t>(
        std::lower_bound(model.classes_.begin(), model.classes_.end(), labels[r]) -
        model.classes_.begin());
    double sq = bias_value * bias_value;
    for (std::size_t p = x.offsets[r]; p < x.offsets[r + 1]; ++p) sq += x.values[p] * x.values[p];
    row_norm2[i] = sq;
  }

  // w_c = scale[c] * v[:, c]; norm2[c] tracks ||w_c||^2.
  std::vector<double> v(dims * k, 0.0);
  std::vector<double> scale(k, 1.0);
  std::vector<double> norm2(k, 0.0);
  // Running sum of iterates, kept as sum_c = mass[c] * v[:, c] - u[:, c] so
  // that sparse steps stay sparse.
  std::vector<double> u(options.average ? dims * k : 0, 0.0);
  std::vector<double> mass(k, 0.0);
  std::size_t averaged_steps = 0;
  const std::size_t average_from = options.epochs / 2;
  std::vector<double> score(k);
  const double lambda = 1.0 / (c * static_cast<double>(rows.size()));
  const double radius2 = 1.0 / lambda;

  Rng rng = make_rng(seed);
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::size_t t = 0;
  for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    const bool averaging = options.average && epoch >= average_from;
    for (std::size_t i : order) {
      ++t;
      const std::size_t r = rows[i];
      std::fill(score.begin(), score.end(), 0.0);
      for (std::size_t p = x.offsets[r]; p < x.offsets[r + 1]; ++p) {
        const double* col = &v[x.indices[p] * k];
        for (std::size_t cl = 0; cl < k; ++cl) score[cl] += col[cl] * x.values[p];
      }
      if (options.bias) {
        const double* col = &v[x.columns * k];
        for (std::size_t cl = 0; cl < k; ++cl) score[cl] += col[cl];
      }
      for (std::size_t cl = 0; cl < k; ++cl) score[cl] *= scale[cl];

      const double eta = 1.0 / (lambda * static_cast<double>(t));
      const double shrink = 1.0 - 1.0 / static_cast<double>(t);
      if (shrink == 0.0) {
        std::fill(v.begin(), v.end(), 0.0);
        std::fill(scale.begin(), scale.end(), 1.0);
      }
      for (std::size_t cl = 0; cl < k; ++cl) {
        const double y = target[i] == cl ? 1.0 : -1.0;
        const bool violated = y * score[cl] < 1.0;
        norm2[cl] = shrink * shrink * norm2[cl];
        if (shrink != 0.0) scale[cl] *= shrink;
        if (violated) {
          norm2[cl] += 2.0 * shrink * eta * y * score[cl] + eta * eta * row_norm2[i];
          const double step = eta * y / scale[cl];
          const double carried = averaging ? mass[cl] * step : 0.0;
          for (std::size_t p = x.offsets[r]; p < x.offsets[r + 1]; ++p) {
            v[x.indices[p] * k + cl] += step * x.values[p];
            if (averaging) u[x.indices[p] * k + cl] += carried * x.values[p];
          }
          if (options.bias) {
            v[x.columns * k + cl] += step;
            if (averaging) u[x.columns * k + cl] += carried;
          }
        }
        if (norm2[cl] > radius2) {
          scale[cl] *= std::sqrt(radius2 / norm2[cl]);
          norm2[cl] = radius2;
        }
        if (scale[cl] < 1e-100) {
          for (std::size_t d = 0; d < dims; ++d) v[d * k + cl] *= scale[cl];
          mass[cl] /= scale[cl];
          scale[cl] = 1.0;
        }
        if (averaging) mass[cl] += scale[cl];
      }
      averaged_steps += averaging;
    }
  }

  model.weights_.resize(dims * k);
  for (std::size_t d = 0; d < dims; ++d) {
    for (std::size_t cl = 0; cl < k; ++cl) {
      const std::size_t at = d * k + cl;
      model.weights_[at] = averaged_steps > 0
                               ? (mass[cl] * v[at] - u[at]) / static_cast<double>(averaged_steps)
                               : v[at] * scale[cl];
    }
  }
  return model;
}

std::vector<double> LinearSvm::scores(const SparseRows& x, std::size_t row) const {
  const std::size_t k = classes_.size();
  std::vector<double> out(k, 0.0);
  for (std::size_t p = x.offsets[row]; p < x.offsets[row + 1]; ++p) {
    if (x.indices[p] >= columns_) continue;
    const double* col = &weights_[x.indices[p] * k];
    for (std::size_t cl = 0; cl < k; ++cl) out[cl] += col[cl] * x.values[p];
  }
  if (bias_) {
    const double* col = &weights_[columns_ * k];
    for (std::size_t cl = 0; cl < k; ++cl) out[cl] += col[cl];
  }
  return out;
}

int LinearSvm::predict(const SparseRows& x, std::size_t row) const {
  const auto s = scores(x, row);
  return classes_[static_cast<std::size_t>(std::max_element(s.begin(), s.end()) - s.begin())];
}

namespace {

SparseRows single_row(const FeatureVector& v, const FeatureRegistry& registry) {
  return SparseRows::build(std::span<const FeatureVector>(&v, 1), registry);
}

}  // namespace

int FeatureSvm::predict(const FeatureVector& v) const {
  return svm_.predict(single_row(v, registry_), 0);
}

std::vector<double> FeatureSvm::scores(const FeatureVector& v) const {
  return svm_.scores(single_row(v, registry_), 0);
}

FeatureSvm train_linear_svm(std::span<const FeatureVector> features,
                            std::span<const int> labels, double c, std::uint64_t seed,
                            const SvmOptions& options) {
  if (features.size() != labels.size()) {
    throw std::invalid_argument("feature and label counts differ");
  }
  FeatureRegistry registry(features);
  const auto x = SparseRows::build(features, registry);
  std::vector<std::size_t> rows(features.size());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  auto svm = LinearSvm::train(x, rows, labels, c, seed, options);
  return FeatureSvm(std::move(registry), std::move(svm));
}

FeatureVector unit_normalized(const FeatureVector& v) {
  const double norm2 = v.squared_norm();
  if (norm2 == 0.0) return v;
  return v.scaled(1.0 / std::sqrt(norm2));
}

}  // namespace hgk
