// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hgk/oracles.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hgk/errors.h"
#include "hgk/random.h"

namespace hgk {

AttributeKernel AttributeKernel::dirac() {
  return AttributeKernel([](const AttributedGraph& g, NodeIndex u, const AttributedGraph& h,
                            NodeIndex w) {
    if (g.has_labels() && h.has_labels()) return g.label(u) == h.label(w) ? 1.0 : 0.0;
    if (g.has_attributes() && h.has_attributes()) {
      return std::ranges::equal(g.attribute(u), h.attribute(w)) ? 1.0 : 0.0;
    }
    throw PreconditionError("Dirac kernel needs labels or attributes on both graphs");
  });
}

AttributeKernel AttributeKernel::gaussian_rbf(double gamma) {
  return AttributeKernel([gamma](const AttributedGraph& g, NodeIndex u,
                                 const AttributedGraph& h, NodeIndex w) {
    const auto a = g.attribute(u);
    const auto b = h.attribute(w);
    if (a.size() != b.size()) throw std::invalid_argument("attribute dimensions differ");
    double sq = 0;
    for (std::size_t k = 0; k < a.size(); ++k) sq += (a[k] - b[k]) * (a[k] - b[k]);
    return std::exp(-gamma * sq);
  });
}

AttributeKernel AttributeKernel::constant(double value) {
  return AttributeKernel(
      [value](const AttributedGraph&, NodeIndex, const AttributedGraph&, NodeIndex) {
        return value;
      });
}

AttributeKernel AttributeKernel::tabulated(std::vector<double> table, std::size_t h_nodes) {
  return AttributeKernel([table = std::move(table), h_nodes](const AttributedGraph&,
                                                             NodeIndex u,
                                                             const AttributedGraph&,
                                                             NodeIndex w) {
    return table.at(static_cast<std::size_t>(u) * h_nodes + w);
  });
}

DistanceKernel DistanceKernel::dirac() {
  return DistanceKernel([](Distance a, Distance b) { return a == b ? 1.0 : 0.0; });
}

AttributeKernel collision_kernel_table(const AttributedGraph& g, const AttributedGraph& h,
                                       double r, HashMode mode, std::size_t trials,
                                       std::uint64_t seed) {
  if (!g.has_attributes() || !h.has_attributes()) {
    throw PreconditionError("collision kernel requires attributes");
  }
  std::vector<double> table(g.node_count() * h.node_count());
  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    for (NodeIndex w = 0; w < h.node_count(); ++w) {
      Rng rng = make_rng(derive_seed(derive_seed(seed, u), w));
      table[u * h.node_count() + w] =
          estimate_collision_kernel(g.attribute(u), h.attribute(w), r, mode, trials, rng);
    }
  }
  return AttributeKernel::tabulated(std::move(table), h.node_count());
}

namespace {

// Node-pair similarity matrix of one round.
struct PairTable {
  std::size_t cols;
  std::vector<double> values;
  double operator()(NodeIndex v, NodeIndex w) const { return values[v * cols + w]; }
};

PairTable base_table(const AttributedGraph& g, const AttributedGraph& h,
                     const AttributeKernel& ka) {
  PairTable t{h.node_count(), std::vector<double>(g.node_count() * h.node_count())};
  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    for (NodeIndex w = 0; w < h.node_count(); ++w) t.values[u * t.cols + w] = ka(g, u, h, w);
  }
  return t;
}

// Enumerates bijections from `left` to `right` whose pairs all have positive
// previous-round similarity, accumulating their count and product sum.
class BijectionEnumerator {
 public:
  BijectionEnumerator(std::span<const NodeIndex> left, std::span<const NodeIndex> right,
                      const PairTable& prev)
      : left_(left), right_(right), prev_(prev), used_(right.size(), false) {}

  void run() { extend(0, 1.0); }
  std::size_t count() const { return count_; }
  double product_sum() const { return sum_; }

 private:
  void extend(std::size_t pos, double product) {
    if (pos == left_.size()) {
      ++count_;
      sum_ += product;
      return;
    }
    for (std::size_t j = 0; j < right_.size(); ++j) {
      if (used_[j]) continue;
      const double s = prev_(left_[pos], right_[j]);
      if (!(s > 0)) continue;
      used_[j] = true;
      extend(pos + 1, product * s);
      used_[j] = false;
    }
  }

  std::span<const NodeIndex> left_;
  std::span<const NodeIndex> right_;
  const PairTable& prev_;
  std::vector<bool> used_;
  std::size_t count_ = 0;
  double sum_ = 0;
};

void check_caps(const AttributedGraph& g, const WlOracleCaps& caps) {
  if (g.node_count() > caps.max_nodes) {
    throw CapExceeded("max_nodes", caps.max_nodes, g.node_count());
  }
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) > caps.max_degree) {
      throw CapExceeded("max_degree", caps.max_degree, g.degree(v));
    }
  }
}

}  // namespace

double implicit_sp(const AttributedGraph& g, const AttributedGraph& h,
                   const AttributeKernel& ka, const DistanceKernel& kd) {
  const DistanceTable dg(g);
  const DistanceTable dh(h);
  const auto node_sim = base_table(g, h, ka);
  const auto ng = static_cast<NodeIndex>(g.node_count());
  const auto nh = static_cast<NodeIndex>(h.node_count());
  double total = 0;
  for (NodeIndex u = 0; u < ng; ++u) {
    for (NodeIndex v = 0; v < ng; ++v) {
      if (u == v) continue;
      for (NodeIndex w = 0; w < nh; ++w) {
        for (NodeIndex z = 0; z < nh; ++z) {
          if (w == z) continue;
          const double distance_sim = kd(dg(u, v), dh(w, z));
          if (distance_sim == 0.0) continue;
          total += node_sim(u, w) * node_sim(v, z) * distance_sim;
        }
      }
    }
  }
  return total;
}

double implicit_wl(const AttributedGraph& g, const AttributedGraph& h, std::uint32_t depth,
                   const AttributeKernel& ka, const WlOracleCaps& caps) {
  check_caps(g, caps);
  check_caps(h, caps);
  PairTable current = base_table(g, h, ka);
  double total = 0;
  for (double value : current.values) total += value;
  for (std::uint32_t i = 1; i <= depth; ++i) {
    PairTable next{current.cols, std::vector<double>(current.values.size(), 0.0)};
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      for (NodeIndex w = 0; w < h.node_count(); ++w) {
        const double prev = current(v, w);
        if (prev == 0.0) continue;
        const auto nv = g.neighbors(v);
        const auto nw = h.neighbors(w);
        if (nv.size() != nw.size()) continue;
        BijectionEnumerator bijections(nv, nw, current);
        bijections.run();
        if (bijections.count() == 0) continue;
        next.values[v * next.cols + w] =
            prev * bijections.product_sum() / static_cast<double>(bijections.count());
      }
    }
    current = std::move(next);
    for (double value : current.values) total += value;
  }
  return total;
}

}  // namespace hgk
