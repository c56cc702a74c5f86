// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hgk/datagen.h"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/chi_squared.hpp>
#include <gtest/gtest.h>

#include "hgk/feature_registry.h"
#include "hgk/linear_svm.h"
#include "hgk/shortest_path.h"
#include "test_util.h"

namespace hgk {
namespace {

bool connected(const AttributedGraph& g) {
  const DistanceTable d(g);
  for (NodeIndex v = 1; v < g.node_count(); ++v) {
    if (d(0, v) == kUnreachable) return false;
  }
  return true;
}

TEST(ErGraph, DegenerateProbabilities) {
  Rng rng = make_rng(51);
  EXPECT_EQ(gen_er_graph(7, 0.0, rng).edge_count(), 0u);
  EXPECT_EQ(gen_er_graph(7, 1.0, rng).edge_count(), 21u);
  EXPECT_THROW(gen_er_graph(0, 0.5, rng), std::invalid_argument);
  EXPECT_THROW(gen_er_graph(3, 1.5, rng), std::invalid_argument);
}

TEST(ErGraph, MeanEdgeCountMatchesBinomial) {
  Rng rng = make_rng(52);
  const int samples = 10000;
  double sum = 0;
  for (int i = 0; i < samples; ++i) sum += static_cast<double>(gen_er_graph(10, 0.2, rng).edge_count());
  const double se = std::sqrt(45 * 0.2 * 0.8 / samples);
  EXPECT_NEAR(sum / samples, 9.0, 3 * se);
}

TEST(ErGraph, EdgeCountDistributionPassesChiSquare) {
  Rng rng = make_rng(53);
  const int samples = 10000;
  std::map<std::size_t, double> observed;
  for (int i = 0; i < samples; ++i) observed[gen_er_graph(10, 0.2, rng).edge_count()] += 1;
  const boost::math::binomial_distribution<double> binomial(45, 0.2);
  // Pool tails so every bin expects at least 5 samples.
  std::vector<std::pair<double, double>> bins;  // observed, expected
  double tail_obs = 0, tail_exp = 0;
  for (std::size_t k = 0; k <= 45; ++k) {
    const double expected = samples * boost::math::pdf(binomial, static_cast<double>(k));
    tail_obs += observed[k];
    tail_exp += expected;
    if (tail_exp >= 5 && k < 20) {
      bins.emplace_back(tail_obs, tail_exp);
      tail_obs = tail_exp = 0;
    }
  }
  bins.back().first += tail_obs;
  bins.back().second += tail_exp;
  double statistic = 0;
  for (const auto& [o, e] : bins) statistic += (o - e) * (o - e) / e;
  const boost::math::chi_squared_distribution<double> chi2(static_cast<double>(bins.size() - 1));
  EXPECT_GT(boost::math::cdf(boost::math::complement(chi2, statistic)), 0.001);
}

TEST(PerturbEdges, ZeroFractionKeepsGraph) {
  Rng rng = make_rng(54);
  const auto g = gen_er_graph(10, 0.4, rng).with_class_label(3);
  EXPECT_EQ(perturb_edges(g, 0.0, rng), g);
}

TEST(PerturbEdges, CompleteGraphForcesDeletes) {
  Rng rng = make_rng(55);
  const auto k = gen_er_graph(8, 1.0, rng);  // 28 edges
  // The first operation must delete; later additions refill that slot.
  EXPECT_EQ(perturb_edges(k, 0.25, rng, 1.0).edge_count(), 27u);
  EXPECT_EQ(perturb_edges(k, 0.25, rng, 0.0).edge_count(), 28u - 7u);
}

TEST(PerturbEdges, AppliesRoundedOperationCount) {
  Rng rng = make_rng(56);
  std::vector<Edge> edges;
  for (NodeIndex v = 1; v <= 40; ++v) edges.emplace_back(0, v);
  const AttributedGraph star(41, edges);
  EXPECT_EQ(perturb_edges(star, 0.25, rng, 1.0).edge_count(), 50u);
  EXPECT_EQ(perturb_edges(star, 0.25, rng, 0.0).edge_count(), 30u);
  const auto mixed = perturb_edges(star, 0.25, rng);
  const auto adds = static_cast<int>(mixed.edge_count()) - 30;
  EXPECT_GE(adds, 0);
  EXPECT_LE(adds, 20);
  EXPECT_EQ(adds % 2, 0);
}

TEST(PerturbEdges, KeepsAnnotations) {
  Rng rng = make_rng(57);
  const auto g = testing::path3().with_labels({1, 2, 3}).with_attributes({0.5, 1.5, 2.5}, 1);
  const auto p = perturb_edges(g.with_class_label(2), 1.0, rng);
  EXPECT_EQ(p.labels()[2], 3);
  EXPECT_EQ(p.attribute(1)[0], 1.5);
  EXPECT_EQ(p.class_label(), 2);
}

TEST(Synthie, DefaultShape) {
  const auto c = gen_synthie(SynthieParams{});
  ASSERT_EQ(c.size(), 400u);
  EXPECT_EQ(c.attribute_dim(), 15u);
  std::map<int, int> sizes;
  for (const auto& g : c.graphs) {
    ++sizes[*g.class_label()];
    EXPECT_TRUE(connected(g));
    EXPECT_FALSE(g.has_labels());
  }
  EXPECT_EQ(sizes, (std::map<int, int>{{kC1A, 100}, {kC1B, 100}, {kC2A, 100}, {kC2B, 100}}));
}

TEST(Synthie, DeterministicPerSeed) {
  SynthieParams params;
  params.graphs_per_superclass = 20;
  const auto a = gen_synthie(params);
  const auto b = gen_synthie(params);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.graphs[i], b.graphs[i]);
  params.seed = 2;
  EXPECT_NE(gen_synthie(params).graphs[0], a.graphs[0]);
}

TEST(Synthie, AttributePoolsAreLinearlySeparable) {
  SynthieParams params;
  params.graphs_per_superclass = 20;
  std::vector<std::vector<int>> pools;
  const auto c = gen_synthie(params, &pools);
  std::vector<FeatureVector> rows;
  std::vector<int> labels;
  for (std::size_t gi = 0; gi < c.size(); ++gi) {
    const auto& g = c.graphs[gi];
    ASSERT_EQ(pools[gi].size(), g.node_count());
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      std::vector<FeatureVector::Entry> entries;
      for (std::size_t k = 0; k < g.attribute_dim(); ++k) {
        entries.emplace_back(FeatureKey::wl(0, static_cast<Label>(k)), g.attribute(v)[k]);
      }
      rows.emplace_back(std::move(entries));
      labels.push_back(pools[gi][v]);
    }
  }
  // Train on even rows, test on odd rows.
  std::vector<FeatureVector> train_rows, test_rows;
  std::vector<int> train_labels, test_labels;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    (i % 2 ? test_rows : train_rows).push_back(rows[i]);
    (i % 2 ? test_labels : train_labels).push_back(labels[i]);
  }
  const auto model = train_linear_svm(train_rows, train_labels, 1.0, 1);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < test_rows.size(); ++i) {
    correct += model.predict(test_rows[i]) == test_labels[i];
  }
  EXPECT_GE(static_cast<double>(correct) / static_cast<double>(test_rows.size()), 0.95);
}

TEST(Synthie, RejectsInvalidParameters) {
  SynthieParams params;
  params.mix_probability = 1.5;
  EXPECT_THROW(gen_synthie(params), std::invalid_argument);
  params = SynthieParams{};
  params.seeds_per_graph = 0;
  EXPECT_THROW(gen_synthie(params), std::invalid_argument);
}

}  // namespace
}  // namespace hgk
