// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

// Brute-force implicit kernels. They enumerate node pairs (and neighborhood
// bijections) directly and serve as ground truth for the explicit feature
// maps at small scale.

#ifndef HGK_ORACLES_H_
#define HGK_ORACLES_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "hgk/graph.h"
#include "hgk/hashing.h"
#include "hgk/shortest_path.h"

namespace hgk {

// Similarity of node u of g and node w of h, valued in [0, 1].
class AttributeKernel {
 public:
  using Fn = std::function<double(const AttributedGraph&, NodeIndex, const AttributedGraph&,
                                  NodeIndex)>;

  explicit AttributeKernel(Fn fn) : fn_(std::move(fn)) {}

  // 1 iff the annotations are equal. Labels are compared when both graphs are
  // labeled, attribute vectors otherwise.
  static AttributeKernel dirac();
  // exp(-gamma * ||a(u) - a(w)||^2).
  static AttributeKernel gaussian_rbf(double gamma);
  static AttributeKernel constant(double value);
  // Fixed values for one graph pair: table[u * h_nodes + w].
  static AttributeKernel tabulated(std::vector<double> table, std::size_t h_nodes);

  double operator()(const AttributedGraph& g, NodeIndex u, const AttributedGraph& h,
                    NodeIndex w) const {
    return fn_(g, u, h, w);
  }

 private:
  Fn fn_;
};

// Compares shortest-path lengths; always 0 when either length is unreachable.
class DistanceKernel {
 public:
  using Fn = std::function<double(Distance, Distance)>;

  explicit DistanceKernel(Fn fn) : fn_(std::move(fn)) {}

  // 1 iff the (finite) lengths are equal.
  static DistanceKernel dirac();

  double operator()(Distance a, Distance b) const {
    if (a == kUnreachable || b == kUnreachable) return 0.0;
    return fn_(a, b);
  }

 private:
  Fn fn_;
};

// Tabulates the Monte-Carlo hash collision kernel over all node pairs of
// (g, h): entry (u, w) estimates Pr[h1(a(u)) = h2(a(w))] from `trials` draws.
AttributeKernel collision_kernel_table(const AttributedGraph& g, const AttributedGraph& h,
                                       double r, HashMode mode, std::size_t trials,
                                       std::uint64_t seed);

// Sum over ordered pairs (u, v) of g and (w, z) of h, u != v, w != z, of
//   ka(u, w) * ka(v, z) * kd(d_uv, d_wz).
double implicit_sp(const AttributedGraph& g, const AttributedGraph& h,
                   const AttributeKernel& ka, const DistanceKernel& kd);

struct WlOracleCaps {
  std::size_t max_degree = 5;
  std::size_t max_nodes = 8;
};

// Bijection-based implicit WL subtree kernel:
//   k_0(v, v') = ka(v, v')
//   k_i(v, v') = k_{i-1}(v, v') * mean over M_i(v, v') of prod k_{i-1}(w, w'),
// where M_i holds the bijections N(v) -> N(v') whose matched pairs all have
// k_{i-1} > 0 (k_i = 0 when M_i is empty). Returns the sum of k_i over all
// node pairs and i = 0..depth.
// Throws CapExceeded naming "max_degree" or "max_nodes".
double implicit_wl(const AttributedGraph& g, const AttributedGraph& h, std::uint32_t depth,
                   const AttributeKernel& ka, const WlOracleCaps& caps = {});

}  // namespace hgk

#endif  // HGK_ORACLES_H_
