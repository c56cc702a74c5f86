// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HGK_HASH_GRAPH_KERNEL_H_
#define HGK_HASH_GRAPH_KERNEL_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "hgk/feature_vector.h"
#include "hgk/graph.h"
#include "hgk/hashing.h"
#include "hgk/shortest_path.h"
#include "hgk/weisfeiler_lehman.h"

namespace hgk {

enum class BaseKernel { kWl, kSp };

// kCont:      only hashed attributes are used.
// kLabelCont: discrete labels are combined with hashed attributes. For WL a
//             single label-only WL block (unscaled) precedes the hashed
//             blocks; for SP each node carries the pair (label, hash).
enum class LabelMode { kCont, kLabelCont };

std::string_view to_string(BaseKernel base);
std::string_view to_string(LabelMode mode);
std::optional<BaseKernel> parse_base_kernel(std::string_view text);
std::optional<LabelMode> parse_label_mode(std::string_view text);

struct HgkConfig {
  std::size_t iterations = 20;
  BaseKernel base = BaseKernel::kWl;
  std::uint32_t wl_depth = 3;
  double r = 1.0;
  HashMode hash_mode = HashMode::kShared;
  LabelMode label_mode = LabelMode::kCont;
  SeedSpec seed;

  // Throws std::invalid_argument for iterations == 0 or r <= 0.
  void validate() const;
};

// Mutable state shared by every graph featurized under one config: the
// per-iteration hash functions, label interners and WL dictionaries. Graphs
// must be fed in a fixed order for byte-identical output across runs.
class HgkContext {
 public:
  HgkContext(const HgkConfig& cfg, std::size_t attribute_dim);

  // Hash-kernel feature map of one graph; `graph_index` keys the
  // independent-mode hash streams.
  FeatureVector feature_map(const AttributedGraph& g, std::size_t graph_index);

  // The unscaled base-kernel map of iteration `iteration` (1-based), keys
  // tagged with block = iteration. `distances` may supply g's precomputed
  // distance table for the SP base kernel.
  FeatureVector iteration_map(const AttributedGraph& g, std::size_t graph_index,
                              std::size_t iteration,
                              const DistanceTable* distances = nullptr);

  // The unscaled label-only WL block (kLabelCont with WL base only).
  FeatureVector label_block(const AttributedGraph& g);

  // Labels fed to the base kernel in `iteration` (1-based).
  std::vector<Label> iteration_labels(const AttributedGraph& g, std::size_t graph_index,
                                      std::size_t iteration);

  const HgkConfig& config() const { return cfg_; }

 private:
  struct Iteration {
    IterationHasher hasher;
    std::map<std::pair<Label, Label>, Label> interner;
    WlContext wl;
  };

  Label intern(Iteration& it, Label discrete, Label hashed);

  HgkConfig cfg_;
  std::vector<Iteration> iterations_;
  WlContext label_block_;
};

// Per-dimension standardization over all nodes of all graphs: subtract the
// mean, divide by the population standard deviation. Zero-variance dimensions
// are only centered. Throws PreconditionError when attributes are missing.
GraphCollection standardize_attributes(const GraphCollection& c);

// Feature map of one graph:
//   Phi(G) = sqrt(1/I) * (phi_b(h_1(G)) (+) ... (+) phi_b(h_I(G)))
// plus the label block in kLabelCont/WL mode. Throws PreconditionError for
// graphs without attributes (or without labels in kLabelCont mode).
FeatureVector hgk_feature_map(const AttributedGraph& g, std::size_t graph_index,
                              HgkContext& ctx);

// Feature maps of a whole collection. Iterations run on up to `threads`
// workers; the result does not depend on the thread count.
std::vector<FeatureVector> hgk_feature_maps(const GraphCollection& c, const HgkConfig& cfg,
                                            int threads = 1);

// Plain (unhashed) base-kernel maps on the discrete labels.
std::vector<FeatureVector> discrete_feature_maps(const GraphCollection& c, BaseKernel base,
                                                 std::uint32_t wl_depth);

}  // namespace hgk

#endif  // HGK_HASH_GRAPH_KERNEL_H_
