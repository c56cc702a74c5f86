// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hgk/cross_validation.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <map>
#include <stdexcept>

#include "hgk/errors.h"
#include "hgk/feature_registry.h"
#include "hgk/parallel.h"
#include "hgk/text_format.h"

namespace hgk {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Candidate {
  std::size_t depth_slot;  // index into the prepared design matrices
  double c;
};

// Trains on `train` and returns the number of correct predictions on `test`.
// A training split with a single class predicts that class.
std::size_t fit_and_score(const SparseRows& x, std::span<const int> labels,
                          std::span<const std::size_t> train,
                          std::span<const std::size_t> test, double c, std::uint64_t seed,
                          const SvmOptions& options) {
  const int first = labels[train.front()];
  const bool single = std::ranges::all_of(train, [&](std::size_t r) { return labels[r] == first; });
  std::size_t correct = 0;
  if (single) {
    for (std::size_t r : test) correct += labels[r] == first;
    return correct;
  }
  const auto model = LinearSvm::train(x, train, labels, c, seed, options);
  for (std::size_t r : test) correct += model.predict(x, r) == labels[r];
  return correct;
}

}  // namespace

void CvConfig::validate() const {
  if (folds < 2) throw std::invalid_argument("folds must be >= 2");
  if (inner_folds < 2) throw std::invalid_argument("inner folds must be >= 2");
  if (repetitions == 0) throw std::invalid_argument("repetitions must be >= 1");
  if (c_grid.empty()) throw std::invalid_argument("C grid must not be empty");
  if (select_wl_depth && wl_depth_grid.empty()) {
    throw std::invalid_argument("WL depth grid must not be empty");
  }
}

std::vector<std::size_t> stratified_folds(std::span<const int> labels, std::size_t folds,
                                          Rng& rng) {
  if (folds == 0) throw std::invalid_argument("folds must be >= 1");
  std::map<int, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(i);
  std::vector<std::size_t> assignment(labels.size());
  std::size_t position = 0;
  for (auto& [label, members] : by_class) {
    std::shuffle(members.begin(), members.end(), rng);
    for (std::size_t i : members) assignment[i] = position++ % folds;
  }
  return assignment;
}

EvalReport cross_validate(const GraphCollection& c, const Featurizer& featurize,
                          const CvConfig& cv) {
  cv.validate();
  const std::size_t n = c.size();
  if (n < cv.folds) {
    throw std::invalid_argument("collection has " + std::to_string(n) + " graphs but " +
                                std::to_string(cv.folds) + " folds were requested");
  }
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!c.graphs[i].class_label()) {
      throw std::invalid_argument("graph " + std::to_string(i) + " has no class label");
    }
    labels[i] = *c.graphs[i].class_label();
  }

  std::vector<std::uint32_t> depths;
  if (cv.select_wl_depth) depths = cv.wl_depth_grid;
  const std::size_t depth_slots = std::max<std::size_t>(depths.size(), 1);

  EvalReport report;
  for (std::size_t rep = 0; rep < cv.repetitions; ++rep) {
    auto start = Clock::now();
    const auto features = featurize(rep);
    if (features.size() != n) throw std::logic_error("featurizer returned wrong count");
    report.featurize_seconds += seconds_since(start);

    start = Clock::now();
    std::vector<SparseRows> design(depth_slots);
    for (std::size_t slot = 0; slot < depth_slots; ++slot) {
      std::vector<FeatureVector> prepared(n);
      for (std::size_t i = 0; i < n; ++i) {
        prepared[i] = unit_normalized(depths.empty()
                                          ? features[i]
                                          : features[i].restricted_to_wl_depth(depths[slot]));
      }
      const FeatureRegistry registry(prepared);
      design[slot] = SparseRows::build(prepared, registry);
    }
    report.gram_seconds += seconds_since(start);

    start = Clock::now();
    const std::uint64_t rep_seed = derive_seed(cv.seed, rep);
    Rng fold_rng = make_rng(rep_seed);
    const auto assignment = stratified_folds(labels, cv.folds, fold_rng);

    std::vector<Candidate> candidates;
    for (std::size_t slot = 0; slot < depth_slots; ++slot) {
      for (double cval : cv.c_grid) candidates.push_back({slot, cval});
    }

    std::vector<std::size_t> fold_correct(cv.folds, 0);
    std::vector<std::size_t> fold_size(cv.folds, 0);
    std::vector<Candidate> fold_choice(cv.folds);
    parallel_for(cv.folds, cv.threads, [&](std::size_t f) {
      std::vector<std::size_t> train;
      std::vector<std::size_t> test;
      for (std::size_t i = 0; i < n; ++i) (assignment[i] == f ? test : train).push_back(i);
      const std::uint64_t fold_seed = derive_seed(rep_seed, f + 1);

      Candidate best = candidates.front();
      if (candidates.size() > 1) {
        std::vector<int> train_labels(train.size());
        for (std::size_t i = 0; i < train.size(); ++i) train_labels[i] = labels[train[i]];
        const std::size_t inner = std::min(cv.inner_folds, train.size());
        Rng inner_rng = make_rng(derive_seed(fold_seed, 0));
        const auto inner_assignment = stratified_folds(train_labels, inner, inner_rng);
        std::vector<std::vector<std::size_t>> inner_train(inner);
        std::vector<std::vector<std::size_t>> inner_test(inner);
        for (std::size_t i = 0; i < train.size(); ++i) {
          for (std::size_t g = 0; g < inner; ++g) {
            (inner_assignment[i] == g ? inner_test[g] : inner_train[g]).push_back(train[i]);
          }
        }
        std::size_t best_correct = 0;
        bool have_best = false;
        for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
          std::size_t correct = 0;
          for (std::size_t g = 0; g < inner; ++g) {
            if (inner_train[g].empty() || inner_test[g].empty()) continue;
            correct += fit_and_score(design[candidates[ci].depth_slot], labels, inner_train[g],
                                     inner_test[g], candidates[ci].c,
                                     derive_seed(fold_seed, 1000 + ci * inner + g), cv.svm);
          }
          if (!have_best || correct > best_correct) {
            best = candidates[ci];
            best_correct = correct;
            have_best = true;
          }
        }
      }
      fold_choice[f] = best;
      fold_size[f] = test.size();
      if (!test.empty()) {
        fold_correct[f] = fit_and_score(design[best.depth_slot], labels, train, test, best.c,
                                        derive_seed(fold_seed, 1), cv.svm);
      }
    });
    report.train_seconds += seconds_since(start);

    std::size_t correct = 0;
    for (std::size_t f = 0; f < cv.folds; ++f) {
      correct += fold_correct[f];
      if (fold_size[f] > 0) {
        report.fold_accuracies.push_back(100.0 * static_cast<double>(fold_correct[f]) /
                                         static_cast<double>(fold_size[f]));
      }
      report.selected_c.push_back(fold_choice[f].c);
      if (!depths.empty()) report.selected_wl_depth.push_back(depths[fold_choice[f].depth_slot]);
    }
    report.repetition_accuracies.push_back(100.0 * static_cast<double>(correct) /
                                           static_cast<double>(n));
  }

  const auto reps = static_cast<double>(report.repetition_accuracies.size());
  double sum = 0;
  for (double a : report.repetition_accuracies) sum += a;
  report.mean_accuracy = sum / reps;
  double sq = 0;
  for (double a : report.repetition_accuracies) {
    sq += (a - report.mean_accuracy) * (a - report.mean_accuracy);
  }
  report.stddev_accuracy = std::sqrt(sq / reps);
  return report;
}

EvalReport cross_validate(const GraphCollection& c, const HgkConfig& kernel_cfg,
                          const CvConfig& cv) {
  kernel_cfg.validate();
  HgkConfig cfg = kernel_cfg;
  if (cv.select_wl_depth && cfg.base == BaseKernel::kWl) {
    cfg.wl_depth = std::max(cfg.wl_depth, *std::ranges::max_element(cv.wl_depth_grid));
  }
  return cross_validate(
      c,
      [&](std::size_t rep) {
        HgkConfig run = cfg;
        run.seed.master_seed = derive_seed(cfg.seed.master_seed, rep);
        return hgk_feature_maps(c, run, cv.threads);
      },
      cv);
}

void EvalReport::write_text(std::ostream& out) const {
  char line[160];
  std::snprintf(line, sizeof(line), "accuracy: %.2f%% (+/- %.2f) over %zu repetition(s)\n",
                mean_accuracy, stddev_accuracy, repetition_accuracies.size());
  out << line;
  std::snprintf(line, sizeof(line), "time: featurize %.3fs, gram %.3fs, train %.3fs\n",
                featurize_seconds, gram_seconds, train_seconds);
  out << line;
}

void EvalReport::write_key_values(std::ostream& out) const {
  out << "mean_accuracy: " << format_double(mean_accuracy) << '\n';
  out << "stddev_accuracy: " << format_double(stddev_accuracy) << '\n';
  out << "repetitions: " << repetition_accuracies.size() << '\n';
  out << "featurize_seconds: " << format_double(featurize_seconds) << '\n';
  out << "gram_seconds: " << format_double(gram_seconds) << '\n';
  out << "train_seconds: " << format_double(train_seconds) << '\n';
}

}  // namespace hgk
