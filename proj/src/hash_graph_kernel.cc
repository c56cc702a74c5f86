// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hgk/hash_graph_kernel.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hgk/errors.h"
#include "hgk/parallel.h"

namespace hgk {

std::string_view to_string(BaseKernel base) { return base == BaseKernel::kWl ? "wl" : "sp"; }

std::string_view to_string(LabelMode mode) {
  return mode == LabelMode::kCont ? "cont" : "label-cont";
}

std::optional<BaseKernel> parse_base_kernel(std::string_view text) {
  if (text == "wl") return BaseKernel::kWl;
  if (text == "sp") return BaseKernel::kSp;
  return std::nullopt;
}

std::optional<LabelMode> parse_label_mode(std::string_view text) {
  if (text == "cont") return LabelMode::kCont;
  if (text == "label-cont") return LabelMode::kLabelCont;
  return std::nullopt;
}

void HgkConfig::validate() const {
  if (iterations == 0) throw std::invalid_argument("iterations must be >= 1");
  if (!(r > 0)) throw std::invalid_argument("interval width r must be positive");
}

HgkContext::HgkContext(const HgkConfig& cfg, std::size_t attribute_dim) : cfg_(cfg) {
  cfg_.validate();
  if (attribute_dim == 0) throw PreconditionError("hash graph kernel requires attributes");
  iterations_.reserve(cfg_.iterations);
  for (std::size_t i = 1; i <= cfg_.iterations; ++i) {
    iterations_.push_back(
        {IterationHasher(cfg_.seed, i, cfg_.hash_mode, attribute_dim, cfg_.r), {}, {}});
  }
}

Label HgkContext::intern(Iteration& it, Label discrete, Label hashed) {
  const auto [pos, inserted] =
      it.interner.emplace(std::pair{discrete, hashed}, static_cast<Label>(it.interner.size()));
  return pos->second;
}

std::vector<Label> HgkContext::iteration_labels(const AttributedGraph& g,
                                                std::size_t graph_index,
                                                std::size_t iteration) {
  if (!g.has_attributes()) throw PreconditionError("hash graph kernel requires attributes");
  if (iteration < 1 || iteration > iterations_.size()) {
    throw std::out_of_range("iteration " + std::to_string(iteration) + " out of range");
  }
  const bool composite = cfg_.label_mode == LabelMode::kLabelCont && cfg_.base == BaseKernel::kSp;
  if (composite && !g.has_labels()) {
    throw PreconditionError("label-cont mode requires discrete labels");
  }
  auto& it = iterations_[iteration - 1];
  std::vector<Label> labels(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    const Label hashed = it.hasher.hash(graph_index, v, g.attribute(v));
    labels[v] = intern(it, composite ? g.label(v) : 0, hashed);
  }
  return labels;
}

FeatureVector HgkContext::iteration_map(const AttributedGraph& g, std::size_t graph_index,
                                        std::size_t iteration,
                                        const DistanceTable* distances) {
  const auto labeled = g.with_labels(iteration_labels(g, graph_index, iteration));
  const auto block = static_cast<std::uint32_t>(iteration);
  if (cfg_.base == BaseKernel::kWl) {
    return wl_feature_map(labeled, cfg_.wl_depth, iterations_[iteration - 1].wl, block);
  }
  return distances ? sp_feature_map(labeled, *distances, block) : sp_feature_map(labeled, block);
}

FeatureVector HgkContext::label_block(const AttributedGraph& g) {
  if (!g.has_labels()) throw PreconditionError("label-cont mode requires discrete labels");
  return wl_feature_map(g, cfg_.wl_depth, label_block_, 0);
}

FeatureVector HgkContext::feature_map(const AttributedGraph& g, std::size_t graph_index) {
  if (!g.has_attributes()) throw PreconditionError("hash graph kernel requires attributes");
  const double scale = std::sqrt(1.0 / static_cast<double>(cfg_.iterations));
  const bool with_label_block =
      cfg_.label_mode == LabelMode::kLabelCont && cfg_.base == BaseKernel::kWl;
  std::optional<DistanceTable> distances;
  if (cfg_.base == BaseKernel::kSp) distances.emplace(g);

  std::vector<FeatureVector::Entry> entries;
  if (with_label_block) {
    const auto block = label_block(g);
    entries.assign(block.entries().begin(), block.entries().end());
  }
  for (std::size_t i = 1; i <= cfg_.iterations; ++i) {
    const auto block = iteration_map(g, graph_index, i, distances ? &*distances : nullptr);
    for (const auto& [key, w] : block.entries()) entries.emplace_back(key, w * scale);
  }
  return FeatureVector(std::move(entries));
}

GraphCollection standardize_attributes(const GraphCollection& c) {
  c.validate();
  const auto dim_opt = c.attribute_dim();
  if (!dim_opt) throw PreconditionError("standardization requires node attributes");
  const std::size_t dim = *dim_opt;
  std::vector<double> sum(dim, 0.0);
  std::size_t count = 0;
  for (const auto& g : c.graphs) {
    if (!g.has_attributes()) continue;
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      const auto a = g.attribute(v);
      for (std::size_t k = 0; k < dim; ++k) sum[k] += a[k];
    }
    count += g.node_count();
  }
  GraphCollection out{c.name, c.graphs};
  if (count == 0) return out;
  std::vector<double> mean(dim);
  for (std::size_t k = 0; k < dim; ++k) mean[k] = sum[k] / static_cast<double>(count);
  std::vector<double> sq(dim, 0.0);
  for (const auto& g : c.graphs) {
    if (!g.has_attributes()) continue;
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      const auto a = g.attribute(v);
      for (std::size_t k = 0; k < dim; ++k) sq[k] += (a[k] - mean[k]) * (a[k] - mean[k]);
    }
  }
  std::vector<double> scale(dim, 1.0);
  for (std::size_t k = 0; k < dim; ++k) {
    const double sd = std::sqrt(sq[k] / static_cast<double>(count));
    if (sd > 1e-12 * std::max(1.0, std::abs(mean[k]))) scale[k] = 1.0 / sd;
  }
  for (auto& g : out.graphs) {
    if (!g.has_attributes()) continue;
    std::vector<double> data(g.attribute_data().begin(), g.attribute_data().end());
    for (std::size_t i = 0; i < data.size(); ++i) {
      const std::size_t k = i % dim;
      data[i] = (data[i] - mean[k]) * scale[k];
    }
    g = g.with_attributes(std::move(data), dim);
  }
  return out;
}

FeatureVector hgk_feature_map(const AttributedGraph& g, std::size_t graph_index,
                              HgkContext& ctx) {
  return ctx.feature_map(g, graph_index);
}

std::vector<FeatureVector> hgk_feature_maps(const GraphCollection& c, const HgkConfig& cfg,
                                            int threads) {
  c.validate();
  const auto dim = c.attribute_dim();
  if (!dim) throw PreconditionError("hash graph kernel requires attributes");
  for (const auto& g : c.graphs) {
    if (!g.has_attributes()) throw PreconditionError("hash graph kernel requires attributes");
  }
  HgkContext ctx(cfg, *dim);
  const std::size_t n = c.size();
  const std::size_t iterations = cfg.iterations;

  std::vector<std::optional<DistanceTable>> distances(n);
  if (cfg.base == BaseKernel::kSp) {
    parallel_for(n, threads, [&](std::size_t gi) { distances[gi].emplace(c.graphs[gi]); });
  }

  // Iterations touch disjoint per-iteration state, so they run concurrently;
  // within an iteration graphs go in collection order.
  std::vector<std::vector<FeatureVector>> blocks(iterations, std::vector<FeatureVector>(n));
  parallel_for(iterations, threads, [&](std::size_t i) {
    for (std::size_t gi = 0; gi < n; ++gi) {
      blocks[i][gi] = ctx.iteration_map(c.graphs[gi], gi, i + 1,
                                        distances[gi] ? &*distances[gi] : nullptr);
    }
  });

  std::vector<FeatureVector> label_blocks(n);
  if (cfg.label_mode == LabelMode::kLabelCont && cfg.base == BaseKernel::kWl) {
    for (std::size_t gi = 0; gi < n; ++gi) label_blocks[gi] = ctx.label_block(c.graphs[gi]);
  }

  const double scale = std::sqrt(1.0 / static_cast<double>(iterations));
  std::vector<FeatureVector> out(n);
  parallel_for(n, threads, [&](std::size_t gi) {
    std::size_t total = label_blocks[gi].size();
    for (std::size_t i = 0; i < iterations; ++i) total += blocks[i][gi].size();
    std::vector<FeatureVector::Entry> entries;
    entries.reserve(total);
    entries.assign(label_blocks[gi].entries().begin(), label_blocks[gi].entries().end());
    for (std::size_t i = 0; i < iterations; ++i) {
      for (const auto& [key, w] : blocks[i][gi].entries()) entries.emplace_back(key, w * scale);
      blocks[i][gi] = FeatureVector();
    }
    out[gi] = FeatureVector(std::move(entries));
  });
  return out;
}

std::vector<FeatureVector> discrete_feature_maps(const GraphCollection& c, BaseKernel base,
                                                 std::uint32_t wl_depth) {
  std::vector<FeatureVector> out;
  out.reserve(c.size());
  WlContext ctx;
  for (const auto& g : c.graphs) {
    out.push_back(base == BaseKernel::kWl ? wl_feature_map(g, wl_depth, ctx)
                                          : sp_feature_map(g));
  }
  return out;
}

}  // namespace hgk
