// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hgk/approximation.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hgk/errors.h"
#include "hgk/oracles.h"
#include "hgk/shortest_path.h"
#include "hgk/text_format.h"

namespace hgk {
namespace {

double finite_ordered_pairs(const AttributedGraph& g) {
  const DistanceTable d(g);
  double count = 0;
  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      if (u != v && d(u, v) != kUnreachable) ++count;
    }
  }
  return count;
}

void require_theorem_setting(const HgkConfig& cfg) {
  if (cfg.hash_mode != HashMode::kIndependent) {
    throw PreconditionError(
        "approximation guarantees need independently drawn hash functions; "
        "shared mode is refused");
  }
  if (cfg.label_mode != LabelMode::kCont) {
    throw PreconditionError("approximation experiment supports cont label mode only");
  }
}

}  // namespace

bool ApproxReport::all_within() const {
  return std::ranges::all_of(checks, [](const LambdaCheck& c) { return c.within; });
}

void ApproxReport::write_csv(std::ostream& out) const {
  out << "iterations,repetitions,oracle,mean,stddev,mean_abs_error\n";
  out << iterations << ',' << repetitions << ',' << format_double(oracle) << ','
      << format_double(mean) << ',' << (stddev ? format_double(*stddev) : "undefined") << ','
      << format_double(mean_abs_error) << '\n';
  out << "lambda,exceedance,bound,binomial_se,within\n";
  for (const auto& c : checks) {
    out << format_double(c.lambda) << ',' << format_double(c.exceedance) << ','
        << format_double(c.bound) << ',' << format_double(c.binomial_se) << ','
        << (c.within ? "yes" : "no") << '\n';
  }
}

double per_iteration_bound(const AttributedGraph& g, const AttributedGraph& h,
                           const HgkConfig& cfg) {
  double bound;
  if (cfg.base == BaseKernel::kSp) {
    bound = finite_ordered_pairs(g) * finite_ordered_pairs(h);
  } else {
    bound = static_cast<double>(cfg.wl_depth + 1) * static_cast<double>(g.node_count()) *
            static_cast<double>(h.node_count());
  }
  return bound > 0 ? bound : 1.0;
}

double hash_kernel_oracle(const AttributedGraph& g, const AttributedGraph& h,
                          const HgkConfig& cfg, const ApproxOptions& options) {
  require_theorem_setting(cfg);
  const auto ka =
      collision_kernel_table(g, h, cfg.r, cfg.hash_mode, options.oracle_trials, options.oracle_seed);
  const double raw = cfg.base == BaseKernel::kSp
                         ? implicit_sp(g, h, ka, DistanceKernel::dirac())
                         : implicit_wl(g, h, cfg.wl_depth, ka);
  return raw / per_iteration_bound(g, h, cfg);
}

ApproxReport approx_error_experiment(const AttributedGraph& g, const AttributedGraph& h,
                                     const HgkConfig& cfg, std::size_t repetitions,
                                     const ApproxOptions& options) {
  require_theorem_setting(cfg);
  cfg.validate();
  if (repetitions == 0) throw std::invalid_argument("repetitions must be >= 1");
  if (!g.has_attributes() || !h.has_attributes() || g.attribute_dim() != h.attribute_dim()) {
    throw PreconditionError("both graphs need attributes of one dimension");
  }

  ApproxReport report;
  report.iterations = cfg.iterations;
  report.repetitions = repetitions;
  report.normalizer = per_iteration_bound(g, h, cfg);
  report.oracle = options.oracle ? *options.oracle : hash_kernel_oracle(g, h, cfg, options);

  report.samples.reserve(repetitions);
  for (std::size_t rep = 0; rep < repetitions; ++rep) {
    HgkConfig run = cfg;
    run.seed.master_seed = derive_seed(cfg.seed.master_seed, rep);
    HgkContext ctx(run, g.attribute_dim());
    const auto phi_g = ctx.feature_map(g, 0);
    const auto phi_h = ctx.feature_map(h, 1);
    report.samples.push_back(dot(phi_g, phi_h) / report.normalizer);
  }

  double sum = 0;
  double abs_error = 0;
  for (double s : report.samples) {
    sum += s;
    abs_error += std::abs(s - report.oracle);
  }
  const auto r = static_cast<double>(repetitions);
  report.mean = sum / r;
  report.mean_abs_error = abs_error / r;
  if (repetitions > 1) {
    double sq = 0;
    for (double s : report.samples) sq += (s - report.mean) * (s - report.mean);
    report.stddev = std::sqrt(sq / (r - 1));
  }

  for (double lambda : options.lambdas) {
    LambdaCheck check;
    check.lambda = lambda;
    const auto exceed = std::ranges::count_if(
        report.samples, [&](double s) { return std::abs(s - report.oracle) >= lambda; });
    check.exceedance = static_cast<double>(exceed) / r;
    check.bound = 2.0 * std::exp(-2.0 * lambda * lambda * static_cast<double>(cfg.iterations));
    const double b = std::min(check.bound, 1.0);
    check.binomial_se = std::sqrt(b * (1 - b) / r);
    check.within = check.exceedance <= check.bound + 3 * check.binomial_se;
    report.checks.push_back(check);
  }
  return report;
}

}  // namespace hgk
