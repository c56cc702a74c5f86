// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: featurize, gram, cv, synthie, oracle-check, bench.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hgk/approximation.h"
#include "hgk/cross_validation.h"
#include "hgk/datagen.h"
#include "hgk/errors.h"
#include "hgk/feature_registry.h"
#include "hgk/gram_matrix.h"
#include "hgk/hash_graph_kernel.h"
#include "hgk/oracle_suite.h"
#include "hgk/text_format.h"
#include "hgk/tu_format.h"

namespace {

namespace fs = std::filesystem;

struct KernelFlags {
  std::uint64_t seed = 1;
  std::size_t iterations = 20;
  std::string base = "wl";
  std::uint32_t wl_depth = 3;
  double r = 1.0;
  std::string hash_mode = "shared";
  std::string label_mode = "cont";
  int threads = 1;

  hgk::HgkConfig config() const {
    hgk::HgkConfig cfg;
    cfg.seed.master_seed = seed;
    cfg.iterations = iterations;
    cfg.base = *hgk::parse_base_kernel(base);
    cfg.wl_depth = wl_depth;
    cfg.r = r;
    cfg.hash_mode = *hgk::parse_hash_mode(hash_mode);
    cfg.label_mode = *hgk::parse_label_mode(label_mode);
    cfg.validate();
    return cfg;
  }
};

struct DatasetFlags {
  std::string dir;
  std::string name;
  bool discrete = false;  // base kernel on discrete labels only
};

void add_dataset_options(CLI::App* cmd, DatasetFlags& d) {
  cmd->add_option("--dataset-dir", d.dir, "Directory holding the TU-format files")->required();
  cmd->add_option("--name", d.name, "Dataset name (file prefix)")->required();
  cmd->add_flag("--discrete", d.discrete,
                "Ignore attributes and run the base kernel on discrete labels "
                "(node degrees when the dataset has none)");
}

// Loads a dataset and prepares it for the requested kernel: attributes are
// standardized over the whole collection, and degree labels fill in for
// missing discrete labels where a mode needs them.
hgk::GraphCollection load(const DatasetFlags& d, const hgk::HgkConfig& cfg) {
  hgk::TuParseStats stats;
  auto c = hgk::parse_tu_dataset(d.dir, d.name, &stats);
  if (stats.self_loops_dropped + stats.duplicate_edges_dropped > 0) {
    std::cerr << "note: dropped " << stats.self_loops_dropped << " self-loop(s) and "
              << stats.duplicate_edges_dropped << " duplicate edge(s)\n";
  }
  if (d.discrete || cfg.label_mode == hgk::LabelMode::kLabelCont) {
    c = hgk::assign_degree_labels(c);
  }
  if (!d.discrete) c = hgk::standardize_attributes(c);
  return c;
}

std::vector<hgk::FeatureVector> featurize(const hgk::GraphCollection& c, const DatasetFlags& d,
                                          const hgk::HgkConfig& cfg, int threads) {
  if (d.discrete) return hgk::discrete_feature_maps(c, cfg.base, cfg.wl_depth);
  return hgk::hgk_feature_maps(c, cfg, threads);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const auto value = hgk::parse_number<double>(std::string_view(text).substr(start, end - start));
    if (!value) throw CLI::ValidationError("list", "bad number in '" + text + "'");
    out.push_back(*value);
    start = end + 1;
  }
  return out;
}

int run_featurize(const KernelFlags& k, const DatasetFlags& d, const std::string& out_path,
                  const std::string& keys_path) {
  const auto cfg = k.config();
  const auto c = load(d, cfg);
  const auto features = featurize(c, d, cfg, k.threads);
  const hgk::FeatureRegistry registry(features);
  auto out = open_output(out_path);
  hgk::write_feature_file(features, c, registry, out);
  if (!keys_path.empty()) {
    auto keys = open_output(keys_path);
    registry.write(keys);
  }
  std::cerr << c.size() << " graphs, " << registry.size() << " features\n";
  return 0;
}

int run_gram(const KernelFlags& k, const DatasetFlags& d, const std::string& out_path,
             std::string labels_path, bool raw) {
  const auto cfg = k.config();
  const auto c = load(d, cfg);
  const auto features = featurize(c, d, cfg, k.threads);
  auto gram = hgk::gram_matrix(features, k.threads);
  if (!raw) gram = hgk::cosine_normalize(gram);
  auto out = open_output(out_path);
  gram.write_csv(out);
  if (labels_path.empty()) labels_path = out_path + ".labels";
  auto labels = open_output(labels_path);
  hgk::write_class_labels(c, labels);
  return 0;
}

int run_cv(const KernelFlags& k, const DatasetFlags& d, hgk::CvConfig cv,
           const std::string& c_grid, const std::string& depth_grid) {
  const auto cfg = k.config();
  const auto c = load(d, cfg);
  if (!c_grid.empty()) cv.c_grid = parse_double_list(c_grid);
  if (!depth_grid.empty()) {
    cv.wl_depth_grid.clear();
    for (double v : parse_double_list(depth_grid)) {
      cv.wl_depth_grid.push_back(static_cast<std::uint32_t>(v));
    }
  }
  cv.threads = k.threads;
  cv.seed = k.seed;

  hgk::EvalReport report;
  if (d.discrete) {
    auto run = cfg;
    if (cv.select_wl_depth) run.wl_depth = *std::ranges::max_element(cv.wl_depth_grid);
    const auto features = hgk::discrete_feature_maps(c, run.base, run.wl_depth);
    report = hgk::cross_validate(c, [&](std::size_t) { return features; }, cv);
  } else {
    report = hgk::cross_validate(c, cfg, cv);
  }
  report.write_text(std::cout);
  report.write_key_values(std::cout);
  return 0;
}

int run_synthie(hgk::SynthieParams params, std::uint64_t seed, const std::string& out_dir,
                const std::string& name) {
  params.seed = seed;
  const auto c = hgk::gen_synthie(params);
  hgk::write_tu_dataset(c, out_dir, name);
  std::cerr << "wrote " << c.size() << " graphs to " << (fs::path(out_dir) / name).string()
            << "_*.txt\n";
  return 0;
}

void print_row(const char* check, bool passed, const std::string& detail) {
  std::printf("%-28s %-4s %s\n", check, passed ? "PASS" : "FAIL", detail.c_str());
}

int run_oracle_check(const KernelFlags& k, std::size_t sp_graphs, std::size_t wl_pairs,
                     std::size_t approx_pairs, std::size_t repetitions, std::size_t iterations,
                     std::size_t trials) {
  hgk::Rng rng = hgk::make_rng(k.seed);
  bool ok = true;

  std::vector<hgk::AttributedGraph> graphs;
  for (std::size_t i = 0; i < sp_graphs; ++i) {
    graphs.push_back(hgk::random_labeled_graph(1, 8, 0.3, 3, rng));
  }
  const auto sp = hgk::check_sp_equivalence(graphs);
  print_row("sp explicit == implicit", sp.passed(),
            std::to_string(sp.mismatches) + "/" + std::to_string(sp.pairs) + " mismatches");
  ok &= sp.passed();

  std::vector<std::pair<hgk::AttributedGraph, hgk::AttributedGraph>> pairs;
  for (std::size_t i = 0; i < wl_pairs; ++i) {
    auto g = hgk::random_bounded_degree_graph(1, 6, 0.4, 3, 2, rng);
    auto h = hgk::random_bounded_degree_graph(1, 6, 0.4, 3, 2, rng);
    pairs.emplace_back(std::move(g), std::move(h));
  }
  for (std::uint32_t depth = 0; depth <= 2; ++depth) {
    const auto wl = hgk::check_wl_equivalence(pairs, depth);
    const std::string label = "wl explicit == implicit h=" + std::to_string(depth);
    print_row(label.c_str(), wl.passed(),
              std::to_string(wl.mismatches) + "/" + std::to_string(wl.pairs) + " mismatches");
    ok &= wl.passed();
  }

  hgk::HgkConfig cfg;
  cfg.base = hgk::BaseKernel::kSp;
  cfg.hash_mode = hgk::HashMode::kIndependent;
  cfg.iterations = iterations;
  cfg.r = k.r;
  cfg.seed.master_seed = k.seed;
  hgk::ApproxOptions options;
  options.oracle_trials = trials;
  options.oracle_seed = hgk::derive_seed(k.seed, 1);
  std::size_t index = 0;
  for (const auto& [g, h] : hgk::approximation_pairs(approx_pairs, hgk::derive_seed(k.seed, 2))) {
    const auto report = hgk::approx_error_experiment(g, h, cfg, repetitions, options);
    std::string detail = "oracle " + hgk::format_double(report.oracle) + ", exceedance";
    for (const auto& c : report.checks) detail += " " + hgk::format_double(c.exceedance);
    const std::string label = "hoeffding pair " + std::to_string(index++);
    print_row(label.c_str(), report.all_within(), detail);
    ok &= report.all_within();
  }
  return ok ? 0 : 1;
}

int run_bench(const KernelFlags& k, const DatasetFlags& d, const std::string& iteration_list,
              std::size_t graphs) {
  hgk::GraphCollection c;
  auto cfg = k.config();
  if (!d.dir.empty()) {
    c = load(d, cfg);
  } else {
    hgk::Rng rng = hgk::make_rng(k.seed);
    c.name = "er";
    for (std::size_t i = 0; i < graphs; ++i) {
      c.graphs.push_back(hgk::random_attributed_graph(20, 40, 0.1, 4, rng));
    }
    if (cfg.label_mode == hgk::LabelMode::kLabelCont) c = hgk::assign_degree_labels(c);
  }
  std::printf("iterations,seconds\n");
  for (double value : parse_double_list(iteration_list)) {
    cfg.iterations = static_cast<std::size_t>(value);
    const auto start = std::chrono::steady_clock::now();
    const auto features = hgk::hgk_feature_maps(c, cfg, k.threads);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%zu,%.6f\n", cfg.iterations, seconds);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hash graph kernels for graphs with continuous attributes"};
  app.require_subcommand(1);
  app.fallthrough();

  KernelFlags k;
  app.add_option("--seed", k.seed, "Master seed");
  app.add_option("--iterations", k.iterations, "Hashing iterations I")->check(CLI::PositiveNumber);
  app.add_option("--base", k.base, "Base kernel")->check(CLI::IsMember({"wl", "sp"}));
  app.add_option("--wl-depth", k.wl_depth, "WL refinement depth");
  app.add_option("--r", k.r, "LSH interval width")->check(CLI::PositiveNumber);
  app.add_option("--hash-mode", k.hash_mode, "Hash function sharing")
      ->check(CLI::IsMember({"shared", "independent"}));
  app.add_option("--label-mode", k.label_mode, "Use attributes only or labels plus attributes")
      ->check(CLI::IsMember({"cont", "label-cont"}));
  app.add_option("--threads", k.threads, "Worker threads")->check(CLI::PositiveNumber);

  DatasetFlags featurize_data;
  std::string featurize_out;
  std::string featurize_keys;
  auto* featurize_cmd = app.add_subcommand("featurize", "Write sparse feature vectors");
  add_dataset_options(featurize_cmd, featurize_data);
  featurize_cmd->add_option("--out", featurize_out, "Feature file (LIBSVM style)")->required();
  featurize_cmd->add_option("--keys", featurize_keys, "Optional feature index file");

  DatasetFlags gram_data;
  std::string gram_out;
  std::string gram_labels;
  bool gram_raw = false;
  auto* gram_cmd = app.add_subcommand("gram", "Write the gram matrix as CSV");
  add_dataset_options(gram_cmd, gram_data);
  gram_cmd->add_option("--out", gram_out, "Gram CSV path")->required();
  gram_cmd->add_option("--labels", gram_labels, "Class label sidecar (default <out>.labels)");
  gram_cmd->add_flag("--raw", gram_raw, "Skip cosine normalization");

  DatasetFlags cv_data;
  hgk::CvConfig cv;
  std::string cv_c_grid;
  std::string cv_depth_grid;
  auto* cv_cmd = app.add_subcommand("cv", "Repeated cross-validation with a linear SVM");
  add_dataset_options(cv_cmd, cv_data);
  cv_cmd->add_option("--folds", cv.folds, "Outer folds")->check(CLI::Range(2, 1000));
  cv_cmd->add_option("--repetitions", cv.repetitions, "CV repetitions")
      ->check(CLI::PositiveNumber);
  cv_cmd->add_option("--inner-folds", cv.inner_folds, "Folds for C/depth selection")
      ->check(CLI::Range(2, 1000));
  cv_cmd->add_option("--c-grid", cv_c_grid, "Comma-separated C values");
  cv_cmd->add_flag("--select-depth", cv.select_wl_depth, "Select the WL depth by inner CV");
  cv_cmd->add_option("--depth-grid", cv_depth_grid, "Comma-separated WL depths");
  cv_cmd->add_option("--epochs", cv.svm.epochs, "SVM epochs")->check(CLI::PositiveNumber);

  hgk::SynthieParams synthie;
  std::string synthie_out;
  std::string synthie_name = "Synthie";
  auto* synthie_cmd = app.add_subcommand("synthie", "Generate a Synthie-style dataset");
  synthie_cmd->add_option("--out", synthie_out, "Output directory")->required();
  synthie_cmd->add_option("--name", synthie_name, "Dataset name");
  synthie_cmd->add_option("--seed-graph-size", synthie.seed_graph_size, "Nodes per seed graph");
  synthie_cmd->add_option("--edge-probability", synthie.edge_probability, "Seed graph density");
  synthie_cmd->add_option("--perturbation", synthie.perturbation_fraction,
                          "Fraction of edges added or removed per seed variant");
  synthie_cmd->add_option("--seeds-per-graph", synthie.seeds_per_graph, "Seeds per graph");
  synthie_cmd->add_option("--graphs-per-superclass", synthie.graphs_per_superclass,
                          "Graphs per superclass");
  synthie_cmd->add_option("--attribute-dim", synthie.attribute_dim, "Attribute dimension");
  synthie_cmd->add_option("--mix", synthie.mix_probability,
                          "Probability of drawing seeds from the superclass's own set");

  std::size_t oc_sp_graphs = 100;
  std::size_t oc_wl_pairs = 50;
  std::size_t oc_pairs = 5;
  std::size_t oc_repetitions = 200;
  std::size_t oc_iterations = 50;
  std::size_t oc_trials = 100000;
  auto* oracle_cmd =
      app.add_subcommand("oracle-check", "Compare kernels against brute-force oracles");
  oracle_cmd->add_option("--sp-graphs", oc_sp_graphs, "Random graphs for the SP check");
  oracle_cmd->add_option("--wl-pairs", oc_wl_pairs, "Random pairs for the WL check");
  oracle_cmd->add_option("--pairs", oc_pairs, "Attributed pairs for the Hoeffding check");
  oracle_cmd->add_option("--repetitions", oc_repetitions, "Hoeffding repetitions")
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--hash-iterations", oc_iterations, "Iterations in the Hoeffding check")
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--trials", oc_trials, "Monte-Carlo trials per attribute pair")
      ->check(CLI::PositiveNumber);

  DatasetFlags bench_data;
  std::string bench_iterations = "10,20,40";
  std::size_t bench_graphs = 200;
  auto* bench_cmd = app.add_subcommand("bench", "Feature-map runtime against I");
  bench_cmd->add_option("--dataset-dir", bench_data.dir, "TU dataset (default: synthetic)");
  bench_cmd->add_option("--name", bench_data.name, "Dataset name");
  bench_cmd->add_option("--iteration-list", bench_iterations, "Comma-separated I values");
  bench_cmd->add_option("--graphs", bench_graphs, "Synthetic collection size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*featurize_cmd) return run_featurize(k, featurize_data, featurize_out, featurize_keys);
    if (*gram_cmd) return run_gram(k, gram_data, gram_out, gram_labels, gram_raw);
    if (*cv_cmd) return run_cv(k, cv_data, cv, cv_c_grid, cv_depth_grid);
    if (*synthie_cmd) return run_synthie(synthie, k.seed, synthie_out, synthie_name);
    if (*oracle_cmd) {
      return run_oracle_check(k, oc_sp_graphs, oc_wl_pairs, oc_pairs, oc_repetitions,
                              oc_iterations, oc_trials);
    }
    if (*bench_cmd) {
      if (!bench_data.dir.empty() && bench_data.name.empty()) {
        throw std::invalid_argument("--name is required with --dataset-dir");
      }
      return run_bench(k, bench_data, bench_iterations, bench_graphs);
    }
  } catch (const hgk::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
