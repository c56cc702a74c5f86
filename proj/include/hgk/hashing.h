// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HGK_HASHING_H_
#define HGK_HASHING_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hgk/graph.h"
#include "hgk/random.h"

namespace hgk {

// One member of the 2-stable (Gaussian) LSH family:
//   h(x) = floor((<projection, x> + offset) / width)
// with projection ~ N(0, I_d) and offset ~ U[0, width).
class StableHashFunction {
 public:
  StableHashFunction(std::vector<double> projection, double offset, double width);

  std::size_t dim() const { return projection_.size(); }
  std::span<const double> projection() const { return projection_; }
  double offset() const { return offset_; }
  double width() const { return width_; }

  // Throws std::invalid_argument on dimension mismatch.
  std::int64_t operator()(std::span<const double> x) const;

 private:
  std::vector<double> projection_;
  double offset_;
  double width_;
};

// How hash functions are drawn within one iteration.
//   kShared:      one function per iteration, applied to every attribute;
//   kIndependent: a fresh function per attribute occurrence (graph, node).
enum class HashMode { kShared, kIndependent };

std::string_view to_string(HashMode mode);
std::optional<HashMode> parse_hash_mode(std::string_view text);

// Master seed from which all hash randomness is derived:
//   iteration seed  = derive(master, iteration)
//   per-node stream = derive(derive(iteration seed, graph), node)
struct SeedSpec {
  std::uint64_t master_seed = 0;

  std::uint64_t iteration_seed(std::size_t iteration) const {
    return derive_seed(master_seed, iteration);
  }
};

// Draws one function. Throws std::invalid_argument unless dim >= 1 and r > 0.
StableHashFunction sample_lsh(std::size_t dim, double r, Rng& rng);

// floor((<f.projection, x> + f.offset) / f.width).
std::int64_t apply_hash(const StableHashFunction& f, std::span<const double> x);

// The hash functions of one iteration over a whole collection. Immutable and
// safe to share; in independent mode per-node functions are re-derived on
// demand from (iteration seed, graph, node), so lookups never contend.
class IterationHasher {
 public:
  IterationHasher(const SeedSpec& seed, std::size_t iteration, HashMode mode,
                  std::size_t dim, double r);

  HashMode mode() const { return mode_; }

  // Function applied to node `node` of graph `graph`.
  StableHashFunction function_for(std::size_t graph, NodeIndex node) const;

  std::int64_t hash(std::size_t graph, NodeIndex node, std::span<const double> x) const;

 private:
  HashMode mode_;
  std::size_t dim_;
  double r_;
  std::uint64_t iteration_seed_;
  std::optional<StableHashFunction> shared_;
};

// Copy of g with labels[v] = hash of a(v); attributes are retained. `graph`
// selects the per-graph sub-stream in independent mode.
// Throws PreconditionError when g has no attributes.
AttributedGraph hash_graph(const AttributedGraph& g, const IterationHasher& hasher,
                           std::size_t graph = 0);

// Convenience form drawing the iteration's randomness from `rng`.
AttributedGraph hash_graph(const AttributedGraph& g, HashMode mode, double r, Rng& rng);

// Monte-Carlo estimate of Pr[h1(x) = h2(y)]. In shared mode h1 = h2 is one
// draw per trial; in independent mode h1 and h2 are drawn independently.
double estimate_collision_kernel(std::span<const double> x, std::span<const double> y,
                                 double r, HashMode mode, std::size_t trials, Rng& rng);

}  // namespace hgk

#endif  // HGK_HASHING_H_
