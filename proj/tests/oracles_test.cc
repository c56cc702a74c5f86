// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hgk/oracles.h"

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "hgk/approximation.h"
#include "hgk/errors.h"
#include "hgk/oracle_suite.h"
#include "hgk/shortest_path.h"
#include "hgk/weisfeiler_lehman.h"
#include "test_util.h"

namespace hgk {
namespace {

using testing::path3;
using testing::single_edge;
using testing::triangle;

const auto kDirac = AttributeKernel::dirac();
const auto kDistance = DistanceKernel::dirac();

TEST(ImplicitSp, LabeledPathSelfKernel) {
  const auto p = path3().with_labels({0, 1, 2});
  EXPECT_EQ(implicit_sp(p, p, kDirac, kDistance), 6.0);
}

TEST(ImplicitSp, EdgelessGraphGivesZero) {
  const auto empty = AttributedGraph(3, {}).with_labels({0, 0, 0});
  const auto t = triangle().with_labels({0, 0, 0});
  EXPECT_EQ(implicit_sp(empty, t, kDirac, kDistance), 0.0);
  EXPECT_EQ(implicit_sp(t, empty, kDirac, kDistance), 0.0);
}

TEST(ImplicitSp, ConstantAttributeKernelOnSingleEdge) {
  const auto e = single_edge();
  EXPECT_EQ(implicit_sp(e, e, AttributeKernel::constant(1.0), kDistance), 4.0);
}

TEST(ImplicitSp, MatchesExplicitMapAndIsSymmetric) {
  Rng rng = make_rng(41);
  std::vector<AttributedGraph> graphs;
  for (int i = 0; i < 30; ++i) graphs.push_back(random_labeled_graph(1, 8, 0.3, 3, rng));
  const auto result = check_sp_equivalence(graphs);
  EXPECT_EQ(result.mismatches, 0u);
  EXPECT_EQ(result.pairs, 30u * 31u / 2u);
  for (std::size_t i = 0; i + 1 < graphs.size(); ++i) {
    EXPECT_EQ(implicit_sp(graphs[i], graphs[i + 1], kDirac, kDistance),
              implicit_sp(graphs[i + 1], graphs[i], kDirac, kDistance));
  }
}

TEST(ImplicitSp, DistanceKernelIgnoresUnreachable) {
  EXPECT_EQ(kDistance(kUnreachable, kUnreachable), 0.0);
  EXPECT_EQ(kDistance(2, 2), 1.0);
  EXPECT_EQ(kDistance(2, 3), 0.0);
}

TEST(AttributeKernels, DiracAndRbf) {
  const auto a = path3().with_attributes({0.0, 1.0, 0.0}, 1);
  EXPECT_EQ(kDirac(a, 0, a, 2), 1.0);
  EXPECT_EQ(kDirac(a, 0, a, 1), 0.0);
  const auto rbf = AttributeKernel::gaussian_rbf(0.5);
  EXPECT_DOUBLE_EQ(rbf(a, 0, a, 1), std::exp(-0.5));
  EXPECT_EQ(rbf(a, 1, a, 0), rbf(a, 0, a, 1));
  const auto labeled = a.with_labels({3, 3, 4});
  EXPECT_EQ(kDirac(labeled, 0, labeled, 1), 1.0);  // labels take precedence
}

TEST(ImplicitWl, DepthZeroCountsEqualLabelPairs) {
  const auto t = triangle().with_labels({1, 1, 1});
  EXPECT_EQ(implicit_wl(t, t, 0, kDirac), 9.0);
}

TEST(ImplicitWl, MismatchedNeighborhoodsContributeNothing) {
  // Depth 0: 2 * 3 equal-label pairs. Depth 1: only the (degree 1, degree 1)
  // pairs have a bijection, 2 * 2 of them.
  const auto e = single_edge().with_labels({0, 0});
  const auto p = path3().with_labels({0, 0, 0});
  EXPECT_EQ(implicit_wl(e, p, 1, kDirac), 10.0);
  WlContext ctx;
  const auto fe = wl_feature_map(e, 1, ctx);
  EXPECT_EQ(dot(fe, wl_feature_map(p, 1, ctx)), 10.0);
}

TEST(ImplicitWl, MatchesExplicitWlOnRandomPairs) {
  Rng rng = make_rng(42);
  std::vector<std::pair<AttributedGraph, AttributedGraph>> pairs;
  for (int i = 0; i < 25; ++i) {
    auto g = random_bounded_degree_graph(1, 6, 0.4, 3, 2, rng);
    auto h = random_bounded_degree_graph(1, 6, 0.4, 3, 2, rng);
    pairs.emplace_back(std::move(g), std::move(h));
  }
  for (std::uint32_t depth = 0; depth <= 2; ++depth) {
    EXPECT_EQ(check_wl_equivalence(pairs, depth).mismatches, 0u) << "depth " << depth;
  }
}

TEST(ImplicitWl, RefusesGraphsBeyondCaps) {
  const auto big = AttributedGraph(9, {}).with_labels(std::vector<Label>(9, 0));
  try {
    implicit_wl(big, big, 1, kDirac);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.cap(), "max_nodes");
  }
  std::vector<Edge> star;
  for (NodeIndex v = 1; v < 7; ++v) star.emplace_back(0, v);
  const auto s = AttributedGraph(7, star).with_labels(std::vector<Label>(7, 0));
  try {
    implicit_wl(s, s, 1, kDirac);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.cap(), "max_degree");
  }
  EXPECT_NO_THROW(implicit_wl(s, s, 1, kDirac, WlOracleCaps{6, 8}));
}

TEST(CollisionKernelTable, SymmetricUpToSampling) {
  const auto pairs = approximation_pairs(1, 43);
  const auto& [g, h] = pairs.front();
  const auto forward = collision_kernel_table(g, h, 1.0, HashMode::kIndependent, 20000, 1);
  const auto backward = collision_kernel_table(h, g, 1.0, HashMode::kIndependent, 20000, 2);
  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    for (NodeIndex w = 0; w < h.node_count(); ++w) {
      const double a = forward(g, u, h, w);
      EXPECT_GE(a, 0.0);
      EXPECT_LE(a, 1.0);
      EXPECT_NEAR(a, backward(h, w, g, u), 4 * std::sqrt(0.25 / 20000) * std::sqrt(2.0));
    }
  }
}

HgkConfig theorem_config(std::size_t iterations) {
  HgkConfig cfg;
  cfg.base = BaseKernel::kSp;
  cfg.hash_mode = HashMode::kIndependent;
  cfg.iterations = iterations;
  cfg.seed.master_seed = 17;
  return cfg;
}

TEST(ApproxExperiment, SharedModeIsRefused) {
  const auto pairs = approximation_pairs(1, 44);
  auto cfg = theorem_config(5);
  cfg.hash_mode = HashMode::kShared;
  EXPECT_THROW(approx_error_experiment(pairs[0].first, pairs[0].second, cfg, 3),
               PreconditionError);
}

TEST(ApproxExperiment, LambdaOneNeverExceeded) {
  const auto pairs = approximation_pairs(1, 45);
  ApproxOptions options;
  options.lambdas = {1.0};
  options.oracle_trials = 2000;
  const auto report =
      approx_error_experiment(pairs[0].first, pairs[0].second, theorem_config(5), 30, options);
  ASSERT_EQ(report.checks.size(), 1u);
  EXPECT_EQ(report.checks[0].exceedance, 0.0);
  for (double s : report.samples) {
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, 1.0);
  }
}

TEST(ApproxExperiment, SingleRepetitionHasNoStddev) {
  const auto pairs = approximation_pairs(1, 46);
  ApproxOptions options;
  options.oracle = 0.5;
  const auto report =
      approx_error_experiment(pairs[0].first, pairs[0].second, theorem_config(3), 1, options);
  EXPECT_EQ(report.samples.size(), 1u);
  EXPECT_FALSE(report.stddev.has_value());
  std::ostringstream csv;
  report.write_csv(csv);
  EXPECT_NE(csv.str().find("undefined"), std::string::npos);
}

TEST(ApproxExperiment, MeanConvergesToOracle) {
  const auto pairs = approximation_pairs(2, 47);
  ApproxOptions options;
  options.oracle_trials = 100000;
  for (const auto& [g, h] : pairs) {
    const auto report = approx_error_experiment(g, h, theorem_config(100), 60, options);
    ASSERT_TRUE(report.stddev.has_value());
    const double se = *report.stddev / std::sqrt(60.0);
    // The oracle averages products of two Monte-Carlo table entries, so its
    // own standard error is at most twice that of one entry.
    const double oracle_se = 2 * std::sqrt(0.25 / 100000.0);
    EXPECT_NEAR(report.mean, report.oracle, 3 * se + 3 * oracle_se) << report.oracle;
  }
}

}  // namespace
}  // namespace hgk
