// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HGK_APPROXIMATION_H_
#define HGK_APPROXIMATION_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "hgk/graph.h"
#include "hgk/hash_graph_kernel.h"

namespace hgk {

struct ApproxOptions {
  std::vector<double> lambdas{0.05, 0.1, 0.2};
  // Monte-Carlo draws per node pair for the collision-kernel table.
  std::size_t oracle_trials = 100000;
  std::uint64_t oracle_seed = 0x5eed;
  // Skips the oracle computation when set (already normalized).
  std::optional<double> oracle;
};

struct LambdaCheck {
  double lambda = 0;
  double exceedance = 0;  // fraction of runs with |estimate - oracle| >= lambda
  double bound = 0;       // 2 exp(-2 lambda^2 I)
  double binomial_se = 0; // sqrt(b (1 - b) / R) at b = min(bound, 1)
  bool within = false;    // exceedance <= bound + 3 binomial_se
};

// Kernel values are divided by `normalizer`, the largest value one hashed
// iteration can take, so every sample lies in [0, 1].
struct ApproxReport {
  std::size_t iterations = 0;
  std::size_t repetitions = 0;
  double normalizer = 1;
  double oracle = 0;
  std::vector<double> samples;
  double mean = 0;
  std::optional<double> stddev;  // undefined for a single repetition
  double mean_abs_error = 0;
  std::vector<LambdaCheck> checks;

  bool all_within() const;
  void write_csv(std::ostream& out) const;
};

// Upper bound on one iteration's base-kernel value for (g, h): for SP the
// product of the numbers of ordered node pairs at finite distance, for WL
// (depth + 1) |V(g)| |V(h)|. Returns 1 when the product is 0.
double per_iteration_bound(const AttributedGraph& g, const AttributedGraph& h,
                           const HgkConfig& cfg);

// Normalized implicit kernel the hash kernel converges to, with the node
// kernel tabulated from Monte-Carlo collision estimates in independent mode.
double hash_kernel_oracle(const AttributedGraph& g, const AttributedGraph& h,
                          const HgkConfig& cfg, const ApproxOptions& options = {});

// Runs the hash kernel `repetitions` times with derived seeds and compares
// the normalized estimates against the oracle and the Hoeffding bound for
// each lambda. Requires independent hashing and kCont; throws
// PreconditionError otherwise.
ApproxReport approx_error_experiment(const AttributedGraph& g, const AttributedGraph& h,
                                     const HgkConfig& cfg, std::size_t repetitions,
                                     const ApproxOptions& options = {});

}  // namespace hgk

#endif  // HGK_APPROXIMATION_H_
