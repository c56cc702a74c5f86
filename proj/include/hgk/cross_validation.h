// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HGK_CROSS_VALIDATION_H_
#define HGK_CROSS_VALIDATION_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "hgk/feature_vector.h"
#include "hgk/graph.h"
#include "hgk/hash_graph_kernel.h"
#include "hgk/linear_svm.h"
#include "hgk/random.h"

namespace hgk {

struct CvConfig {
  std::size_t folds = 10;
  std::size_t repetitions = 10;
  std::vector<double> c_grid{1e-3, 1e-2, 1e-1, 1e0, 1e1, 1e2, 1e3};
  std::size_t inner_folds = 10;
  // When set, the WL depth is chosen by inner CV from wl_depth_grid; the
  // featurizer must then produce maps of depth >= the largest grid value.
  bool select_wl_depth = false;
  std::vector<std::uint32_t> wl_depth_grid{0, 1, 2, 3, 4};
  std::uint64_t seed = 1;
  SvmOptions svm;
  int threads = 1;

  // Throws std::invalid_argument for folds < 2 or an empty grid.
  void validate() const;
};

struct EvalReport {
  double mean_accuracy = 0;    // percent, over repetitions
  double stddev_accuracy = 0;  // percent, population std over repetitions
  std::vector<double> repetition_accuracies;
  std::vector<double> fold_accuracies;
  std::vector<double> selected_c;                  // per outer fold
  std::vector<std::uint32_t> selected_wl_depth;    // per outer fold, when selecting
  double featurize_seconds = 0;
  // Unit normalization and sparse assembly of the linear kernel.
  double gram_seconds = 0;
  double train_seconds = 0;

  void write_text(std::ostream& out) const;
  // "key: value" lines; stable keys for scripting.
  void write_key_values(std::ostream& out) const;
};

// Fold index of each sample: per class the samples are shuffled, then all
// classes are dealt round-robin so fold sizes differ by at most one and each
// fold holds its share of every class.
std::vector<std::size_t> stratified_folds(std::span<const int> labels, std::size_t folds,
                                          Rng& rng);

// Produces the feature maps of every graph for one repetition.
using Featurizer = std::function<std::vector<FeatureVector>(std::size_t repetition)>;

// Repeated stratified k-fold CV with C (and optionally WL depth) chosen by an
// inner CV on the training folds. Features are computed once per repetition
// without looking at class labels. Throws std::invalid_argument when the
// collection has fewer graphs than folds or lacks class labels.
EvalReport cross_validate(const GraphCollection& c, const Featurizer& featurize,
                          const CvConfig& cv);

// Hash-kernel features with a fresh seed per repetition.
EvalReport cross_validate(const GraphCollection& c, const HgkConfig& kernel_cfg,
                          const CvConfig& cv);

}  // namespace hgk

#endif  // HGK_CROSS_VALIDATION_H_
