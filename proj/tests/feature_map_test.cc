// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <gtest/gtest.h>

#include "hgk/errors.h"
#include "hgk/feature_vector.h"
#include "hgk/oracle_suite.h"
#include "hgk/shortest_path.h"
#include "hgk/weisfeiler_lehman.h"
#include "test_util.h"

namespace hgk {
namespace {

using testing::path3;
using testing::single_edge;
using testing::triangle;

std::vector<NodeIndex> random_permutation(std::size_t n, Rng& rng) {
  std::vector<NodeIndex> perm(n);
  std::iota(perm.begin(), perm.end(), NodeIndex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

TEST(WlFeatureMap, SingleNodeDepthZero) {
  WlContext ctx;
  const auto f = wl_feature_map(AttributedGraph(1, {}).with_labels({4}), 0, ctx);
  EXPECT_EQ(f, FeatureVector({{FeatureKey::wl(0, 4), 1.0}}));
}

TEST(WlFeatureMap, TriangleDepthOne) {
  WlContext ctx;
  const auto g = triangle().with_labels({1, 1, 1});
  const auto f = wl_feature_map(g, 1, ctx);
  const std::vector<Label> neighbors{1, 1};
  const Label c = ctx.compress(1, neighbors);
  EXPECT_EQ(f, FeatureVector({{FeatureKey::wl(0, 1), 3.0}, {FeatureKey::wl(1, c), 3.0}}));
  EXPECT_EQ(dot(f, f), 18.0);
}

TEST(WlFeatureMap, CompressionIsInjective) {
  WlContext ctx;
  const std::vector<Label> a{1, 2};
  const std::vector<Label> b{1, 1};
  const Label x = ctx.compress(0, a);
  EXPECT_EQ(ctx.compress(0, a), x);
  EXPECT_NE(ctx.compress(0, b), x);
  EXPECT_NE(ctx.compress(1, a), x);
  EXPECT_EQ(ctx.size(), 3u);
}

TEST(WlFeatureMap, DepthsOccupyDisjointKeys) {
  WlContext ctx;
  const auto f = wl_feature_map(path3().with_labels({0, 0, 0}), 3, ctx);
  double per_depth[4] = {0, 0, 0, 0};
  for (const auto& [key, w] : f.entries()) per_depth[key.depth] += w;
  for (double total : per_depth) EXPECT_EQ(total, 3.0);
}

TEST(WlFeatureMap, PermutationInvariant) {
  Rng rng = make_rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_labeled_graph(1, 9, 0.35, 3, rng);
    const auto perm = random_permutation(g.node_count(), rng);
    WlContext ctx;
    EXPECT_EQ(wl_feature_map(g, 3, ctx), wl_feature_map(permute_nodes(g, perm), 3, ctx));
  }
}

TEST(WlFeatureMap, RequiresLabels) {
  WlContext ctx;
  EXPECT_THROW(wl_feature_map(triangle(), 1, ctx), PreconditionError);
}

TEST(Apsp, Examples) {
  const auto p = apsp(path3());
  EXPECT_EQ(p(0, 2), 2);
  EXPECT_EQ(p(0, 1), 1);
  EXPECT_EQ(p(2, 0), 2);
  EXPECT_EQ(apsp(AttributedGraph(2, {}))(0, 1), kUnreachable);
  const auto k4 = apsp(AttributedGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  for (NodeIndex u = 0; u < 4; ++u) {
    for (NodeIndex v = 0; v < 4; ++v) EXPECT_EQ(k4(u, v), u == v ? 0 : 1);
  }
}

TEST(SpFeatureMap, SingleEdge) {
  const auto f = sp_feature_map(single_edge().with_labels({0, 1}));
  EXPECT_EQ(f, FeatureVector({{FeatureKey::sp(0, 1, 1), 1.0}, {FeatureKey::sp(1, 0, 1), 1.0}}));
}

TEST(SpFeatureMap, LabeledPath) {
  const Label a = 0, b = 1, c = 2;
  const auto f = sp_feature_map(path3().with_labels({a, b, c}));
  const FeatureVector expected({{FeatureKey::sp(a, b, 1), 1.0},
                                {FeatureKey::sp(b, a, 1), 1.0},
                                {FeatureKey::sp(b, c, 1), 1.0},
                                {FeatureKey::sp(c, b, 1), 1.0},
                                {FeatureKey::sp(a, c, 2), 1.0},
                                {FeatureKey::sp(c, a, 2), 1.0}});
  EXPECT_EQ(f, expected);
  EXPECT_EQ(dot(f, f), 6.0);
}

TEST(SpFeatureMap, EdgelessGraphIsEmpty) {
  EXPECT_TRUE(sp_feature_map(AttributedGraph(4, {}).with_labels({0, 0, 0, 0})).empty());
}

TEST(SpFeatureMap, PermutationInvariantAndRequiresLabels) {
  Rng rng = make_rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_labeled_graph(1, 9, 0.3, 3, rng);
    const auto perm = random_permutation(g.node_count(), rng);
    EXPECT_EQ(sp_feature_map(g), sp_feature_map(permute_nodes(g, perm)));
  }
  EXPECT_THROW(sp_feature_map(triangle()), PreconditionError);
}

TEST(FeatureVector, DropsZerosAndMergesRepeats) {
  const auto k = FeatureKey::wl(0, 1);
  const FeatureVector v({{k, 2.0}, {FeatureKey::wl(0, 2), 0.0}, {k, 1.5}});
  EXPECT_EQ(v.size(), 1u);
  EXPECT_EQ(v.at(k), 3.5);
  EXPECT_EQ(v.at(FeatureKey::wl(0, 2)), 0.0);
}

TEST(Dot, Examples) {
  const auto k = FeatureKey::sp(1, 2, 3);
  const FeatureVector x({{k, 2.0}, {FeatureKey::wl(1, 1), 4.0}});
  EXPECT_EQ(dot(x, FeatureVector()), 0.0);
  EXPECT_EQ(dot(FeatureVector({{k, 2.0}}), FeatureVector({{k, 3.0}})), 6.0);
}

TEST(Dot, SymmetricAndScalesLinearly) {
  Rng rng = make_rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = sp_feature_map(random_labeled_graph(2, 8, 0.4, 2, rng));
    const auto g = sp_feature_map(random_labeled_graph(2, 8, 0.4, 2, rng));
    EXPECT_EQ(dot(f, g), dot(g, f));
    EXPECT_DOUBLE_EQ(dot(f.scaled(2.5), g), 2.5 * dot(f, g));
  }
}

TEST(FeatureVector, ConcatenationRequiresDisjointKeys) {
  const FeatureVector a({{FeatureKey::wl(0, 1, 1), 1.0}});
  const FeatureVector b({{FeatureKey::wl(0, 1, 2), 2.0}});
  const auto ab = a.concatenated(b);
  EXPECT_EQ(ab.size(), 2u);
  EXPECT_EQ(dot(ab, ab), 5.0);
  EXPECT_THROW(a.concatenated(a), std::invalid_argument);
}

TEST(FeatureVector, RestrictToWlDepth) {
  WlContext ctx;
  const auto g = path3().with_labels({0, 1, 0});
  const auto deep = wl_feature_map(g, 3, ctx);
  EXPECT_EQ(deep.restricted_to_wl_depth(1), wl_feature_map(g, 1, ctx));
}

TEST(FeatureVector, TextFormIsSortedKeyWeightLines) {
  const FeatureVector v({{FeatureKey::sp(0, 1, 2, 3), 1.0}, {FeatureKey::wl(1, 5), 2.5}});
  EXPECT_EQ(v.to_text(), "i3:sp,0,1,2\t1\nwl,1,5\t2.5\n");
}

}  // namespace
}  // namespace hgk
