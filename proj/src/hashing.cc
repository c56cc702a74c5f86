// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hgk/hashing.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hgk/errors.h"

namespace hgk {

StableHashFunction::StableHashFunction(std::vector<double> projection, double offset,
                                       double width)
    : projection_(std::move(projection)), offset_(offset), width_(width) {
  if (!(width_ > 0)) throw std::invalid_argument("hash width must be positive");
  if (projection_.empty()) throw std::invalid_argument("hash dimension must be >= 1");
  if (!(offset_ >= 0 && offset_ < width_)) {
    throw std::invalid_argument("hash offset must lie in [0, width)");
  }
}

std::int64_t StableHashFunction::operator()(std::span<const double> x) const {
  if (x.size() != projection_.size()) {
    throw std::invalid_argument("attribute dimension " + std::to_string(x.size()) +
                                " does not match hash dimension " +
                                std::to_string(projection_.size()));
  }
  double dot = 0;
  for (std::size_t k = 0; k < x.size(); ++k) dot += projection_[k] * x[k];
  return static_cast<std::int64_t>(std::floor((dot + offset_) / width_));
}

std::string_view to_string(HashMode mode) {
  return mode == HashMode::kShared ? "shared" : "independent";
}

std::optional<HashMode> parse_hash_mode(std::string_view text) {
  if (text == "shared") return HashMode::kShared;
  if (text == "independent") return HashMode::kIndependent;
  return std::nullopt;
}

StableHashFunction sample_lsh(std::size_t dim, double r, Rng& rng) {
  if (dim == 0) throw std::invalid_argument("hash dimension must be >= 1");
  if (!(r > 0)) throw std::invalid_argument("interval width r must be positive");
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> projection(dim);
  for (auto& p : projection) p = normal(rng);
  std::uniform_real_distribution<double> uniform(0.0, r);
  double offset = uniform(rng);
  // uniform_real_distribution may round up to r.
  if (offset >= r) offset = 0;
  return StableHashFunction(std::move(projection), offset, r);
}

std::int64_t apply_hash(const StableHashFunction& f, std::span<const double> x) {
  return f(x);
}

IterationHasher::IterationHasher(const SeedSpec& seed, std::size_t iteration,
                                 HashMode mode, std::size_t dim, double r)
    : mode_(mode), dim_(dim), r_(r), iteration_seed_(seed.iteration_seed(iteration)) {
  if (mode_ == HashMode::kShared) {
    Rng rng = make_rng(iteration_seed_);
    shared_.emplace(sample_lsh(dim_, r_, rng));
  } else if (dim_ == 0 || !(r_ > 0)) {
    throw std::invalid_argument("invalid hash dimension or width");
  }
}

StableHashFunction IterationHasher::function_for(std::size_t graph, NodeIndex node) const {
  if (shared_) return *shared_;
  Rng rng = make_rng(derive_seed(derive_seed(iteration_seed_, graph), node));
  return sample_lsh(dim_, r_, rng);
}

std::int64_t IterationHasher::hash(std::size_t graph, NodeIndex node,
                                   std::span<const double> x) const {
  if (shared_) return (*shared_)(x);
  return function_for(graph, node)(x);
}

AttributedGraph hash_graph(const AttributedGraph& g, const IterationHasher& hasher,
                           std::size_t graph) {
  if (!g.has_attributes()) {
    throw PreconditionError("hash_graph requires node attributes");
  }
  std::vector<Label> labels(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    labels[v] = hasher.hash(graph, v, g.attribute(v));
  }
  return g.with_labels(std::move(labels));
}

AttributedGraph hash_graph(const AttributedGraph& g, HashMode mode, double r, Rng& rng) {
  if (!g.has_attributes()) {
    throw PreconditionError("hash_graph requires node attributes");
  }
  const SeedSpec seed{rng()};
  return hash_graph(g, IterationHasher(seed, 0, mode, g.attribute_dim(), r));
}

double estimate_collision_kernel(std::span<const double> x, std::span<const double> y,
                                 double r, HashMode mode, std::size_t trials, Rng& rng) {
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
  if (x.size() != y.size()) throw std::invalid_argument("attribute dimensions differ");
  std::size_t hits = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto h1 = sample_lsh(x.size(), r, rng);
    if (mode == HashMode::kShared) {
      hits += h1(x) == h1(y);
    } else {
      const auto h2 = sample_lsh(x.size(), r, rng);
      hits += h1(x) == h2(y);
    }
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace hgk
