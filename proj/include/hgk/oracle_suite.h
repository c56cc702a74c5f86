// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HGK_ORACLE_SUITE_H_
#define HGK_ORACLE_SUITE_H_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "hgk/random.h"
#include "hgk/graph.h"

namespace hgk {

// Random graphs and canned checks shared by the CLI and the test suites.

// n uniform in [min_nodes, max_nodes], ER edges with probability p, labels
// uniform in [0, alphabet).
AttributedGraph random_labeled_graph(std::size_t min_nodes, std::size_t max_nodes, double p,
                                     Label alphabet, Rng& rng);

// As above, rejecting graphs whose maximum degree exceeds max_degree.
AttributedGraph random_bounded_degree_graph(std::size_t min_nodes, std::size_t max_nodes,
                                            double p, std::size_t max_degree, Label alphabet,
                                            Rng& rng);

// Unlabeled graph with standard normal attributes of dimension dim.
AttributedGraph random_attributed_graph(std::size_t min_nodes, std::size_t max_nodes, double p,
                                        std::size_t dim, Rng& rng);

struct EquivalenceResult {
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  double seconds = 0;
  bool passed() const { return pairs > 0 && mismatches == 0; }
};

// Explicit SP dot products against implicit_sp (Dirac, Dirac) over all
// unordered pairs, including self pairs, of `graphs`.
EquivalenceResult check_sp_equivalence(const std::vector<AttributedGraph>& graphs);

// Explicit WL dot products at `depth` against implicit_wl with Dirac.
EquivalenceResult check_wl_equivalence(
    const std::vector<std::pair<AttributedGraph, AttributedGraph>>& pairs, std::uint32_t depth);

// Small connected attributed pairs (3 <= n <= 6, attribute dimension 2) for approximation
// experiments; the same seed always yields the same pairs.
std::vector<std::pair<AttributedGraph, AttributedGraph>> approximation_pairs(std::size_t count,
                                                                             std::uint64_t seed);

}  // namespace hgk

#endif  // HGK_ORACLE_SUITE_H_
