// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hgk/datagen.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace hgk {
namespace {

std::size_t uniform_index(std::size_t size, Rng& rng) {
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

struct AttributePool {
  std::vector<std::vector<double>> means;

  std::vector<double> draw(Rng& rng) const {
    std::normal_distribution<double> normal(0.0, 1.0);
    const auto& mean = means[uniform_index(means.size(), rng)];
    std::vector<double> x(mean.size());
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = mean[k] + normal(rng);
    return x;
  }
};

std::vector<double> random_unit(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> x(dim);
  double norm = 0;
  do {
    norm = 0;
    for (auto& v : x) {
      v = normal(rng);
      norm += v * v;
    }
  } while (norm == 0);
  norm = std::sqrt(norm);
  for (auto& v : x) v /= norm;
  return x;
}

// Two pools of two clusters each. Every cluster mean lies on the sphere of
// the given radius at 45 degrees from +axis (pool A) or -axis (pool B), so the
// pools are split by the hyperplane orthogonal to a random axis.
std::array<AttributePool, 2> make_pools(std::size_t dim, double radius, Rng& rng) {
  const auto axis = random_unit(dim, rng);
  std::array<AttributePool, 2> pools;
  for (int p = 0; p < 2; ++p) {
    const double sign = p == 0 ? 1.0 : -1.0;
    for (int c = 0; c < 2; ++c) {
      auto z = random_unit(dim, rng);
      double along = 0;
      for (std::size_t k = 0; k < dim; ++k) along += z[k] * axis[k];
      double norm = 0;
      for (std::size_t k = 0; k < dim; ++k) {
        z[k] -= along * axis[k];
        norm += z[k] * z[k];
      }
      norm = std::sqrt(norm);
      std::vector<double> mean(dim);
      for (std::size_t k = 0; k < dim; ++k) {
        // In one dimension there is no orthogonal part; the mean sits on the axis.
        mean[k] = norm > 1e-9 ? radius * std::sqrt(0.5) * (sign * axis[k] + z[k] / norm)
                              : radius * sign * axis[k];
      }
      pools[p].means.push_back(std::move(mean));
    }
  }
  return pools;
}

}  // namespace

AttributedGraph gen_er_graph(std::size_t n, double p, Rng& rng) {
  if (n == 0) throw std::invalid_argument("graph needs at least one node");
  if (!(p >= 0 && p <= 1)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeIndex u = 0; u < n; ++u) {
    for (NodeIndex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return AttributedGraph(n, std::move(edges));
}

AttributedGraph perturb_edges(const AttributedGraph& g, double fraction, Rng& rng,
                              double add_probability) {
  if (!(fraction >= 0 && fraction <= 1)) throw std::invalid_argument("fraction must lie in [0, 1]");
  const std::size_t n = g.node_count();
  const std::size_t max_edges = n * (n - (n > 0 ? 1 : 0)) / 2;
  const auto operations =
      static_cast<std::size_t>(std::llround(fraction * static_cast<double>(g.edge_count())));

  std::vector<Edge> edges = g.edges();
  std::set<Edge> present(edges.begin(), edges.end());
  std::bernoulli_distribution add_coin(add_probability);
  for (std::size_t op = 0; op < operations; ++op) {
    bool add = add_coin(rng);
    if (add && present.size() == max_edges) add = false;
    if (!add && present.empty()) add = true;
    if (add && present.size() == max_edges) break;  // no edge slots at all
    if (add) {
      // Uniform non-edge by indexing into the complement.
      std::size_t target = uniform_index(max_edges - present.size(), rng);
      for (NodeIndex u = 0; u < n; ++u) {
        for (NodeIndex v = u + 1; v < n; ++v) {
          if (present.count({u, v})) continue;
          if (target-- == 0) {
            present.emplace(u, v);
            u = static_cast<NodeIndex>(n);
            break;
          }
        }
      }
    } else {
      auto it = present.begin();
      std::advance(it, static_cast<std::ptrdiff_t>(uniform_index(present.size(), rng)));
      present.erase(it);
    }
  }
  AttributedGraph out(n, std::vector<Edge>(present.begin(), present.end()));
  if (g.has_labels()) out = out.with_labels({g.labels().begin(), g.labels().end()});
  if (g.has_attributes()) {
    out = out.with_attributes({g.attribute_data().begin(), g.attribute_data().end()},
                              g.attribute_dim());
  }
  return out.with_class_label(g.class_label());
}

void SynthieParams::validate() const {
  const auto probability = [](double p) { return p >= 0 && p <= 1; };
  if (!probability(edge_probability) || !probability(perturbation_fraction) ||
      !probability(mix_probability)) {
    throw std::invalid_argument("Synthie probabilities must lie in [0, 1]");
  }
  if (seed_graph_size == 0 || seed_set_size == 0 || seeds_per_graph < 2 ||
      graphs_per_superclass == 0 || attribute_dim == 0) {
    throw std::invalid_argument(
        "Synthie sizes must be positive (at least two seeds per graph)");
  }
}

GraphCollection gen_synthie(const SynthieParams& params,
                            std::vector<std::vector<int>>* node_pools) {
  params.validate();
  if (node_pools) node_pools->clear();
  Rng rng = make_rng(params.seed);

  std::vector<AttributedGraph> seed_sets[2];
  for (auto& set : seed_sets) {
    const auto base = gen_er_graph(params.seed_graph_size, params.edge_probability, rng);
    set.reserve(params.seed_set_size);
    for (std::size_t i = 0; i < params.seed_set_size; ++i) {
      set.push_back(perturb_edges(base, params.perturbation_fraction, rng));
    }
  }
  const auto pools = make_pools(params.attribute_dim, params.pool_radius, rng);

  GraphCollection out{"Synthie", {}};
  out.graphs.reserve(2 * params.graphs_per_superclass);
  std::bernoulli_distribution mix(params.mix_probability);
  for (int superclass = 0; superclass < 2; ++superclass) {
    std::vector<bool> subclass_b(params.graphs_per_superclass, false);
    std::fill(subclass_b.begin() + static_cast<std::ptrdiff_t>(params.graphs_per_superclass / 2),
              subclass_b.end(), true);
    std::shuffle(subclass_b.begin(), subclass_b.end(), rng);

    for (std::size_t gi = 0; gi < params.graphs_per_superclass; ++gi) {
      std::vector<Edge> edges;
      std::vector<int> origin;          // seed set (0 or 1) of each node
      std::vector<std::size_t> seed_of; // which seed slot a node came from
      for (std::size_t s = 0; s < params.seeds_per_graph; ++s) {
        const int from = mix(rng) == (superclass == 0) ? 0 : 1;
        const auto& seed = seed_sets[from][uniform_index(seed_sets[from].size(), rng)];
        const auto offset = static_cast<NodeIndex>(origin.size());
        for (const auto& [u, v] : seed.edges()) edges.emplace_back(offset + u, offset + v);
        origin.insert(origin.end(), seed.node_count(), from);
        seed_of.insert(seed_of.end(), seed.node_count(), s);
      }
      const std::size_t n = origin.size();
      std::set<Edge> present(edges.begin(), edges.end());
      DisjointSets components(n);
      std::size_t component_count = n;
      for (const auto& [u, v] : edges) component_count -= components.unite(u, v);

      const auto add_inter_seed_edge = [&](bool must_merge) {
        while (true) {
          auto u = static_cast<NodeIndex>(uniform_index(n, rng));
          auto v = static_cast<NodeIndex>(uniform_index(n, rng));
          if (seed_of[u] == seed_of[v]) continue;
          if (u > v) std::swap(u, v);
          if (present.count({u, v})) continue;
          if (must_merge && components.find(u) == components.find(v)) continue;
          present.emplace(u, v);
          component_count -= components.unite(u, v);
          return;
        }
      };
      while (component_count > 1) add_inter_seed_edge(true);
      for (std::size_t k = 0; k < params.seeds_per_graph; ++k) add_inter_seed_edge(false);

      const bool is_b = subclass_b[gi];
      std::vector<double> attributes;
      attributes.reserve(n * params.attribute_dim);
      if (node_pools) node_pools->emplace_back(n);
      for (std::size_t v = 0; v < n; ++v) {
        // Subclass A: S1 nodes draw from pool A; subclass B swaps the pools.
        const int pool = (origin[v] == 0) != is_b ? 0 : 1;
        if (node_pools) node_pools->back()[v] = pool;
        const auto x = pools[pool].draw(rng);
        attributes.insert(attributes.end(), x.begin(), x.end());
      }
      const int cls = superclass == 0 ? (is_b ? kC1B : kC1A) : (is_b ? kC2B : kC2A);
      out.graphs.push_back(AttributedGraph(n, std::vector<Edge>(present.begin(), present.end()))
                               .with_attributes(std::move(attributes), params.attribute_dim)
                               .with_class_label(cls));
    }
  }
  return out;
}

}  // namespace hgk
