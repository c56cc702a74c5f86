// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hgk/oracle_suite.h"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "hgk/datagen.h"
#include "hgk/oracles.h"
#include "hgk/shortest_path.h"
#include "hgk/weisfeiler_lehman.h"

namespace hgk {
namespace {

using Clock = std::chrono::steady_clock;

std::size_t draw_size(std::size_t min_nodes, std::size_t max_nodes, Rng& rng) {
  if (min_nodes == 0 || min_nodes > max_nodes) throw std::invalid_argument("bad node range");
  return std::uniform_int_distribution<std::size_t>(min_nodes, max_nodes)(rng);
}

bool connected(const AttributedGraph& g) {
  const DistanceTable d(g);
  for (NodeIndex v = 1; v < g.node_count(); ++v) {
    if (d(0, v) == kUnreachable) return false;
  }
  return true;
}

std::size_t max_degree(const AttributedGraph& g) {
  std::size_t d = 0;
  for (NodeIndex v = 0; v < g.node_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

}  // namespace

AttributedGraph random_labeled_graph(std::size_t min_nodes, std::size_t max_nodes, double p,
                                     Label alphabet, Rng& rng) {
  if (alphabet < 1) throw std::invalid_argument("label alphabet must be non-empty");
  const auto g = gen_er_graph(draw_size(min_nodes, max_nodes, rng), p, rng);
  std::uniform_int_distribution<Label> pick(0, alphabet - 1);
  std::vector<Label> labels(g.node_count());
  for (auto& l : labels) l = pick(rng);
  return g.with_labels(std::move(labels));
}

AttributedGraph random_bounded_degree_graph(std::size_t min_nodes, std::size_t max_nodes,
                                            double p, std::size_t degree_cap, Label alphabet,
                                            Rng& rng) {
  while (true) {
    auto g = random_labeled_graph(min_nodes, max_nodes, p, alphabet, rng);
    if (max_degree(g) <= degree_cap) return g;
  }
}

AttributedGraph random_attributed_graph(std::size_t min_nodes, std::size_t max_nodes, double p,
                                        std::size_t dim, Rng& rng) {
  const auto g = gen_er_graph(draw_size(min_nodes, max_nodes, rng), p, rng);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> data(g.node_count() * dim);
  for (auto& x : data) x = normal(rng);
  return g.with_attributes(std::move(data), dim);
}

EquivalenceResult check_sp_equivalence(const std::vector<AttributedGraph>& graphs) {
  const auto start = Clock::now();
  std::vector<FeatureVector> maps;
  maps.reserve(graphs.size());
  for (const auto& g : graphs) maps.push_back(sp_feature_map(g));
  const auto ka = AttributeKernel::dirac();
  const auto kd = DistanceKernel::dirac();
  EquivalenceResult result;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i; j < graphs.size(); ++j) {
      ++result.pairs;
      if (dot(maps[i], maps[j]) != implicit_sp(graphs[i], graphs[j], ka, kd)) {
        ++result.mismatches;
      }
    }
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

EquivalenceResult check_wl_equivalence(
    const std::vector<std::pair<AttributedGraph, AttributedGraph>>& pairs, std::uint32_t depth) {
  const auto start = Clock::now();
  const auto ka = AttributeKernel::dirac();
  EquivalenceResult result;
  for (const auto& [g, h] : pairs) {
    WlContext ctx;
    const auto fg = wl_feature_map(g, depth, ctx);
    const auto fh = wl_feature_map(h, depth, ctx);
    ++result.pairs;
    if (dot(fg, fh) != implicit_wl(g, h, depth, ka)) ++result.mismatches;
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

std::vector<std::pair<AttributedGraph, AttributedGraph>> approximation_pairs(std::size_t count,
                                                                             std::uint64_t seed) {
  Rng rng = make_rng(seed);
  std::vector<std::pair<AttributedGraph, AttributedGraph>> out;
  const auto draw = [&] {
    while (true) {
      auto g = random_attributed_graph(3, 6, 0.5, 2, rng);
      if (connected(g)) return g;
    }
  };
  for (std::size_t i = 0; i < count; ++i) {
    auto g = draw();
    auto h = draw();
    out.emplace_back(std::move(g), std::move(h));
  }
  return out;
}

}  // namespace hgk
