// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hgk/hash_graph_kernel.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "hgk/errors.h"
#include "hgk/gram_matrix.h"
#include "hgk/oracle_suite.h"
#include "hgk/shortest_path.h"
#include "hgk/weisfeiler_lehman.h"
#include "test_util.h"

namespace hgk {
namespace {

GraphCollection attributed_collection(std::size_t count, std::uint64_t seed,
                                      bool labels = false) {
  Rng rng = make_rng(seed);
  GraphCollection c{"random", {}};
  for (std::size_t i = 0; i < count; ++i) {
    auto g = random_attributed_graph(2, 9, 0.35, 3, rng);
    if (labels) g = assign_degree_labels(g);
    c.graphs.push_back(g);
  }
  return c;
}

double min_eigenvalue(const GramMatrix& k) {
  Eigen::MatrixXd m(k.size(), k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    for (std::size_t j = 0; j < k.size(); ++j) m(i, j) = k(i, j);
  }
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues().minCoeff();
}

// Base-kernel value of iteration i computed without HgkContext: hash each
// node with the iteration's hasher and featurize both graphs in one fresh
// context.
double iteration_kernel(const AttributedGraph& g, const AttributedGraph& h,
                        const HgkConfig& cfg, std::size_t iteration) {
  const IterationHasher hasher(cfg.seed, iteration, cfg.hash_mode, g.attribute_dim(), cfg.r);
  const auto hg = hash_graph(g, hasher, 0);
  const auto hh = hash_graph(h, hasher, 1);
  if (cfg.base == BaseKernel::kSp) return dot(sp_feature_map(hg), sp_feature_map(hh));
  WlContext ctx;
  const auto fg = wl_feature_map(hg, cfg.wl_depth, ctx);
  return dot(fg, wl_feature_map(hh, cfg.wl_depth, ctx));
}

TEST(StandardizeAttributes, Examples) {
  GraphCollection c{"s", {testing::single_edge().with_attributes({1.0, 3.0}, 1)}};
  const auto s = standardize_attributes(c);
  EXPECT_DOUBLE_EQ(s.graphs[0].attribute(0)[0], -1.0);
  EXPECT_DOUBLE_EQ(s.graphs[0].attribute(1)[0], 1.0);

  GraphCollection constant{"c", {testing::triangle().with_attributes({5, 5, 5}, 1)}};
  const auto standardized = standardize_attributes(constant);
  for (double x : standardized.graphs[0].attribute_data()) {
    EXPECT_EQ(x, 0.0);
  }
}

TEST(StandardizeAttributes, PoolsAllGraphsAndIsIdempotent) {
  const auto c = attributed_collection(10, 31);
  const auto once = standardize_attributes(c);
  double sum = 0, sq = 0, count = 0;
  for (const auto& g : once.graphs) {
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      sum += g.attribute(v)[1];
      sq += g.attribute(v)[1] * g.attribute(v)[1];
      ++count;
    }
  }
  EXPECT_NEAR(sum / count, 0.0, 1e-12);
  EXPECT_NEAR(sq / count, 1.0, 1e-12);
  const auto twice = standardize_attributes(once);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto a = once.graphs[i].attribute_data();
    const auto b = twice.graphs[i].attribute_data();
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_NEAR(a[k], b[k], 1e-12);
  }
}

TEST(StandardizeAttributes, RequiresAttributes) {
  GraphCollection c{"x", {testing::triangle()}};
  EXPECT_THROW(standardize_attributes(c), PreconditionError);
}

TEST(HgkFeatureMap, SingleIterationIsTheBaseMap) {
  const auto c = attributed_collection(3, 32);
  HgkConfig cfg;
  cfg.iterations = 1;
  cfg.wl_depth = 2;
  cfg.seed.master_seed = 5;
  HgkContext ctx(cfg, 3);
  const auto phi = hgk_feature_map(c.graphs[0], 0, ctx);
  HgkContext fresh(cfg, 3);
  EXPECT_EQ(phi, fresh.iteration_map(c.graphs[0], 0, 1));
}

TEST(HgkFeatureMap, SameGraphTwiceSharedModeNormalizesToOne) {
  const auto c = attributed_collection(1, 33);
  GraphCollection twice{"t", {c.graphs[0], c.graphs[0]}};
  HgkConfig cfg;
  cfg.iterations = 7;
  const auto maps = hgk_feature_maps(twice, cfg);
  EXPECT_EQ(maps[0], maps[1]);
  const auto k = cosine_normalize(gram_matrix(maps));
  EXPECT_NEAR(k(0, 1), 1.0, 1e-12);
}

TEST(HgkFeatureMap, DotIsAverageOfIterationKernels) {
  const auto c = attributed_collection(6, 34);
  for (auto base : {BaseKernel::kWl, BaseKernel::kSp}) {
    for (auto mode : {HashMode::kShared, HashMode::kIndependent}) {
      HgkConfig cfg;
      cfg.iterations = 6;
      cfg.base = base;
      cfg.hash_mode = mode;
      cfg.wl_depth = 2;
      cfg.r = 0.8;
      cfg.seed.master_seed = 77;
      const auto maps = hgk_feature_maps(c, cfg);
      for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = a; b < c.size(); ++b) {
          // The oracle hashes its graphs as indices 0 and 1; in independent
          // mode only that pair lines up with the collection indices.
          if (mode == HashMode::kIndependent && !(a == 0 && b == 1)) continue;
          double expected = 0;
          for (std::size_t i = 1; i <= cfg.iterations; ++i) {
            expected += iteration_kernel(c.graphs[a], c.graphs[b], cfg, i);
          }
          expected /= static_cast<double>(cfg.iterations);
          const double actual = dot(maps[a], maps[b]);
          EXPECT_NEAR(actual, expected, 1e-9 * std::max(1.0, std::abs(expected)))
              << to_string(base) << " " << to_string(mode) << " " << a << "," << b;
        }
      }
    }
  }
}

TEST(HgkFeatureMap, DeterministicAndThreadIndependent) {
  const auto c = attributed_collection(12, 35);
  for (auto base : {BaseKernel::kWl, BaseKernel::kSp}) {
    HgkConfig cfg;
    cfg.iterations = 5;
    cfg.base = base;
    cfg.hash_mode = HashMode::kIndependent;
    const auto one = hgk_feature_maps(c, cfg, 1);
    EXPECT_EQ(one, hgk_feature_maps(c, cfg, 1));
    EXPECT_EQ(one, hgk_feature_maps(c, cfg, 4));
    cfg.seed.master_seed = 1;
    EXPECT_NE(one, hgk_feature_maps(c, cfg, 1));
  }
}

TEST(HgkFeatureMap, VarianceShrinksLikeOneOverI) {
  const auto pairs = approximation_pairs(1, 36);
  const auto& [g, h] = pairs.front();
  const auto variance = [&](std::size_t iterations) {
    const int runs = 400;
    double sum = 0, sq = 0;
    for (int run = 0; run < runs; ++run) {
      HgkConfig cfg;
      cfg.base = BaseKernel::kSp;
      cfg.iterations = iterations;
      cfg.hash_mode = HashMode::kIndependent;
      cfg.seed.master_seed = derive_seed(1000 + iterations, static_cast<std::uint64_t>(run));
      GraphCollection c{"pair", {g, h}};
      const auto maps = hgk_feature_maps(c, cfg);
      const double k = dot(maps[0], maps[1]);
      sum += k;
      sq += k * k;
    }
    const double mean = sum / runs;
    return (sq / runs - mean * mean) * runs / (runs - 1);
  };
  const double ratio = variance(10) / variance(40);
  EXPECT_GE(ratio, 2.0);
  EXPECT_LE(ratio, 6.0);
}

TEST(HgkFeatureMap, LabelContWlAppendsOneUnscaledLabelBlock) {
  const auto c = attributed_collection(4, 37, true);
  HgkConfig cfg;
  cfg.iterations = 4;
  cfg.wl_depth = 1;
  cfg.label_mode = LabelMode::kLabelCont;
  const auto maps = hgk_feature_maps(c, cfg);
  HgkContext fresh(cfg, 3);
  for (std::size_t gi = 0; gi < c.size(); ++gi) {
    const auto label_block = fresh.label_block(c.graphs[gi]);
    for (const auto& [key, w] : label_block.entries()) EXPECT_EQ(maps[gi].at(key), w);
    double hashed_mass = 0;
    for (const auto& [key, w] : maps[gi].entries()) {
      if (key.block > 0) hashed_mass += w;
    }
    // Each iteration contributes (depth + 1) * n counts, scaled by 1/sqrt(I).
    EXPECT_NEAR(hashed_mass, 2.0 * c.graphs[gi].node_count() * 4 / 2.0, 1e-9);
  }
}

TEST(HgkFeatureMap, LabelContSpUsesCompositeLabels) {
  // Two nodes with identical attributes but different labels never match.
  const auto g = testing::single_edge().with_attributes({0.2, 0.2}, 1).with_labels({0, 1});
  HgkConfig cfg;
  cfg.iterations = 3;
  cfg.base = BaseKernel::kSp;
  cfg.label_mode = LabelMode::kLabelCont;
  HgkContext ctx(cfg, 1);
  for (std::size_t i = 1; i <= 3; ++i) {
    const auto labels = ctx.iteration_labels(g, 0, i);
    EXPECT_NE(labels[0], labels[1]);
  }
  HgkConfig cont = cfg;
  cont.label_mode = LabelMode::kCont;
  HgkContext plain(cont, 1);
  const auto labels = plain.iteration_labels(g, 0, 1);
  EXPECT_EQ(labels[0], labels[1]);
}

TEST(HgkFeatureMap, Preconditions) {
  HgkConfig cfg;
  GraphCollection unattributed{"u", {testing::triangle()}};
  EXPECT_THROW(hgk_feature_maps(unattributed, cfg), PreconditionError);
  cfg.label_mode = LabelMode::kLabelCont;
  GraphCollection unlabeled{"l", {testing::triangle().with_attributes({1, 2, 3}, 1)}};
  EXPECT_THROW(hgk_feature_maps(unlabeled, cfg), PreconditionError);
  cfg.iterations = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.iterations = 1;
  cfg.r = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(GramMatrix, SingleGraph) {
  const auto c = attributed_collection(1, 38);
  HgkConfig cfg;
  const auto k = gram_matrix(c, cfg);
  ASSERT_EQ(k.size(), 1u);
  const auto maps = hgk_feature_maps(c, cfg);
  EXPECT_DOUBLE_EQ(k(0, 0), maps[0].squared_norm());
  EXPECT_GE(k(0, 0), 0.0);
}

TEST(GramMatrix, DuplicatedGraphGivesIdenticalRows) {
  auto c = attributed_collection(4, 39);
  c.graphs.push_back(c.graphs[1]);
  const auto k = gram_matrix(c, HgkConfig{});
  for (std::size_t j = 0; j < c.size(); ++j) EXPECT_EQ(k(1, j), k(4, j));
}

TEST(GramMatrix, SymmetricAndPositiveSemidefinite) {
  const auto c = attributed_collection(25, 40, true);
  for (auto base : {BaseKernel::kWl, BaseKernel::kSp}) {
    for (auto mode : {LabelMode::kCont, LabelMode::kLabelCont}) {
      HgkConfig cfg;
      cfg.base = base;
      cfg.label_mode = mode;
      cfg.iterations = 5;
      const auto raw = gram_matrix(c, cfg, 2);
      EXPECT_TRUE(raw.is_symmetric());
      EXPECT_GE(min_eigenvalue(raw), -1e-8);
      const auto k = cosine_normalize(raw);
      EXPECT_TRUE(k.is_symmetric());
      EXPECT_GE(min_eigenvalue(k), -1e-8);
      for (std::size_t i = 0; i < k.size(); ++i) EXPECT_NEAR(k(i, i), 1.0, 1e-12);
    }
  }
}

TEST(GramMatrix, EmptyCollectionThrows) {
  EXPECT_THROW(gram_matrix(GraphCollection{}, HgkConfig{}), std::invalid_argument);
}

TEST(CosineNormalize, Examples) {
  GramMatrix k(2);
  k(0, 0) = 4;
  k(0, 1) = k(1, 0) = 2;
  k(1, 1) = 9;
  const auto n = cosine_normalize(k);
  EXPECT_DOUBLE_EQ(n(0, 1), 1.0 / 3.0);
  EXPECT_EQ(n(0, 0), 1.0);
  EXPECT_EQ(n(1, 1), 1.0);
}

TEST(CosineNormalize, ZeroFeatureRow) {
  GramMatrix k(2);
  k(0, 0) = 4;
  const auto n = cosine_normalize(k);
  EXPECT_EQ(n(0, 1), 0.0);
  EXPECT_EQ(n(1, 0), 0.0);
  EXPECT_EQ(n(1, 1), 1.0);
}

TEST(GramMatrix, CsvRows) {
  GramMatrix k(2);
  k(0, 0) = 1;
  k(0, 1) = k(1, 0) = 0.25;
  k(1, 1) = 2;
  std::ostringstream out;
  k.write_csv(out);
  EXPECT_EQ(out.str(), "1,0.25\n0.25,2\n");
}

}  // namespace
}  // namespace hgk
