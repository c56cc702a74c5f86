// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HGK_DATAGEN_H_
#define HGK_DATAGEN_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hgk/graph.h"
#include "hgk/random.h"

namespace hgk {

// G(n, p): each of the n(n-1)/2 possible edges independently with prob. p.
AttributedGraph gen_er_graph(std::size_t n, double p, Rng& rng);

// Applies round(fraction * |E|) edit operations. Each is an insertion of a
// uniform non-edge with probability add_probability, else a deletion of a
// uniform edge; an operation that is impossible in the current graph turns
// into the other kind. Labels, attributes and class label are kept.
AttributedGraph perturb_edges(const AttributedGraph& g, double fraction, Rng& rng,
                              double add_probability = 0.5);

struct SynthieParams {
  std::size_t seed_graph_size = 10;      // n of the two ER seed graphs
  double edge_probability = 0.2;
  double perturbation_fraction = 0.25;
  std::size_t seed_set_size = 200;       // perturbed variants per seed graph
  std::size_t seeds_per_graph = 10;
  std::size_t graphs_per_superclass = 200;
  std::size_t attribute_dim = 15;
  double mix_probability = 0.8;
  double pool_radius = 4.0;              // norm of the attribute cluster means
  std::uint64_t seed = 1;

  // Throws std::invalid_argument for out-of-range values.
  void validate() const;
};

// Class ids of gen_synthie graphs.
enum SynthieClass : int { kC1A = 0, kC1B = 1, kC2A = 2, kC2B = 3 };

// Four-class benchmark whose classes are separable only by combining graph
// structure with node attributes:
//   - two ER graphs G1, G2 each spawn a seed set of perturbed variants;
//   - a graph is the disjoint union of seeds_per_graph seeds, drawn from S1
//     with probability mix_probability for superclass C1 (S2 for C2), joined
//     by random edges between seeds until connected plus seeds_per_graph
//     extra inter-seed edges;
//   - attribute pools A and B are two-cluster Gaussian mixtures; in subclass A
//     nodes from S1 seeds draw from A and others from B, swapped in subclass B;
//   - subclasses split each superclass exactly in half.
// Graphs carry attributes and class labels but no discrete labels. When
// `node_pools` is given it receives, per graph and node, the attribute pool
// (0 = A, 1 = B) the node's attribute was drawn from.
GraphCollection gen_synthie(const SynthieParams& params,
                            std::vector<std::vector<int>>* node_pools = nullptr);

}  // namespace hgk

#endif  // HGK_DATAGEN_H_
