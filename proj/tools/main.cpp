// Copyright 2026 The mosfit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// mosfit: batch aggregation, evaluation, and simulation of 1..K opinion
// ratings. Subcommands: aggregate, evaluate, simulate.

#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mosfit/errors.hpp"
#include "mosfit/io.hpp"
#include "mosfit/latent_fit.hpp"
#include "mosfit/metrics.hpp"
#include "mosfit/ratings.hpp"
#include "mosfit/synth.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

using nlohmann::ordered_json;

void write_manifest(const std::string& output_path,
                    const std::string& command, const ordered_json& config,
                    const std::vector<std::string>& inputs) {
  ordered_json m;
  m["command"] = command;
  m["config"] = config;
  ordered_json digests;
  for (const auto& p : inputs) digests[p] = mosfit::file_digest(p);
  m["input_digests"] = digests;
  m["tool_version"] = kToolVersion;
  std::ofstream out(output_path + ".manifest.json", std::ios::binary);
  if (!out) {
    throw mosfit::InputError("cannot write manifest for '" + output_path + "'");
  }
  out << m.dump(2) << '\n';
}

struct AggregateArgs {
  std::string dataset;
  std::string method = "latent";
  std::string output;
  std::size_t n_low = 0;
  mosfit::FitConfig fit;
  int jobs = 1;
  int precision = 12;
};

int run_aggregate(const AggregateArgs& args) {
  auto data = mosfit::read_dataset(args.dataset, args.fit.scale_max);

  struct Row {
    double mos = 0.0;
    double representative = 0.0;
    std::optional<mosfit::FitResult> fit;
  };
  std::vector<Row> rows(data.size());

  if (args.method == "mos") {
    for (std::size_t i = 0; i < data.size(); ++i) {
      rows[i].mos = rows[i].representative = mosfit::mos(data[i]);
    }
  } else if (args.method == "nlow") {
    if (args.n_low == 0) {
      throw CLI::ValidationError("--n-low is required for method nlow");
    }
    for (std::size_t i = 0; i < data.size(); ++i) {
      rows[i].mos = mosfit::mos(data[i]);
      rows[i].representative = mosfit::n_low_mos(data[i], args.n_low);
    }
  } else {  // latent
    const int jobs = std::max(1, args.jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= data.size()) break;
        rows[i].mos = mosfit::mos(data[i]);
        rows[i].fit = mosfit::fit(data[i], args.fit);
        rows[i].representative = rows[i].fit->representative;
      }
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
  }

  std::ofstream out(args.output, std::ios::binary);
  if (!out) throw mosfit::InputError("cannot write '" + args.output + "'");
  out << "sample_id,n_ratings,mos,representative,method,sigma_hat,loss,"
         "initial_loss,fell_back,iterations\n";
  auto fmt = [&](double x) { return mosfit::format_double(x, args.precision); };
  for (std::size_t i = 0; i < data.size(); ++i) {
    out << data[i].sample_id << ',' << data[i].ratings.size() << ','
        << fmt(rows[i].mos) << ',' << fmt(rows[i].representative) << ','
        << args.method << ',';
    if (rows[i].fit) {
      const auto& f = *rows[i].fit;
      out << fmt(f.params.sigma) << ',' << fmt(f.loss) << ','
          << fmt(f.initial_loss) << ',' << (f.fell_back ? "true" : "false")
          << ',' << f.iterations_run;
    } else {
      out << ",,,,";
    }
    out << '\n';
  }
  out.close();

  ordered_json cfg;
  cfg["method"] = args.method;
  cfg["scale_max"] = args.fit.scale_max;
  cfg["precision"] = args.precision;
  if (args.method == "nlow") cfg["n_low"] = args.n_low;
  if (args.method == "latent") {
    cfg["beta"] = args.fit.beta;
    cfg["max_iters"] = args.fit.max_iters;
    cfg["sigma_min"] = args.fit.sigma_min;
    cfg["jobs"] = args.jobs;
  }
  write_manifest(args.output, "aggregate", cfg, {args.dataset});
  return kExitOk;
}

struct EvaluateArgs {
  std::string pred;
  std::string truth;
  std::string mode = "correlation";
  std::string pairs;
  std::string annotations;
  std::string output;
  int min_agree = 3;
};

int run_evaluate(const EvaluateArgs& args) {
  auto pred = mosfit::read_scores(args.pred);
  ordered_json report;
  std::vector<std::string> inputs{args.pred};

  if (args.mode == "correlation") {
    if (args.truth.empty()) {
      throw CLI::ValidationError("--truth is required for mode correlation");
    }
    inputs.push_back(args.truth);
    auto truth = mosfit::read_scores(args.truth);
    try {
      report["lcc"] = mosfit::lcc(pred, truth);
      report["srcc"] = mosfit::srcc(pred, truth);
    } catch (const mosfit::UndefinedMetricError& e) {
      report["lcc"] = nullptr;
      report["srcc"] = nullptr;
      report["reason"] = e.what();
    }
  } else {  // ppref
    std::vector<mosfit::PreferencePair> pairs;
    if (!args.annotations.empty()) {
      inputs.push_back(args.annotations);
      auto anns = mosfit::read_annotations(args.annotations);
      pairs = mosfit::screen_preferences(anns, args.min_agree);
      report["n_pairs_screened"] = pairs.size();
      report["n_pairs_dropped"] = anns.size() - pairs.size();
    } else if (!args.pairs.empty()) {
      inputs.push_back(args.pairs);
      pairs = mosfit::read_pairs(args.pairs);
    } else {
      throw CLI::ValidationError(
          "mode ppref needs --pairs or --annotations");
    }
    try {
      double p = mosfit::ppref(pred, pairs);
      report["ppref"] = p;
      report["n_all"] = pairs.size();
      report["n_correct"] = static_cast<std::size_t>(
          p * static_cast<double>(pairs.size()) + 0.5);
    } catch (const mosfit::UndefinedMetricError& e) {
      report["ppref"] = nullptr;
      report["n_all"] = pairs.size();
      report["reason"] = e.what();
    }
  }

  std::cout << report.dump(2) << std::endl;
  if (!args.output.empty()) {
    std::ofstream out(args.output, std::ios::binary);
    if (!out) throw mosfit::InputError("cannot write '" + args.output + "'");
    out << report.dump(2) << '\n';
    out.close();
    ordered_json cfg;
    cfg["mode"] = args.mode;
    if (args.mode == "ppref") cfg["min_agree"] = args.min_agree;
    write_manifest(args.output, "evaluate", cfg, inputs);
  }
  return kExitOk;
}

struct SimulateArgs {
  mosfit::SynthConfig synth;
  std::vector<double> mu_grid;
  std::vector<double> sigma_grid;
  std::string output;
  std::string format = "csv";
};

int run_simulate(const SimulateArgs& args) {
  std::vector<mosfit::RatingSet> data;
  std::vector<std::pair<std::string, std::pair<double, double>>> truth;

  auto emit = [&](const mosfit::SynthConfig& cfg) {
    auto part = mosfit::generate_dataset(cfg);
    for (auto& rs : part) {
      truth.push_back({rs.sample_id, {cfg.mu_star, cfg.sigma_star}});
      data.push_back(std::move(rs));
    }
  };

  if (!args.mu_grid.empty() || !args.sigma_grid.empty()) {
    if (args.mu_grid.empty() || args.sigma_grid.empty()) {
      throw CLI::ValidationError("--mu-grid and --sigma-grid go together");
    }
    std::uint64_t cell = 0;
    for (double mu : args.mu_grid) {
      for (double sigma : args.sigma_grid) {
        mosfit::SynthConfig cfg = args.synth;
        cfg.mu_star = mu;
        cfg.sigma_star = sigma;
        // Distinct stream per grid cell, still a pure function of the seed.
        cfg.seed = mosfit::SplitMix64::substream(args.synth.seed, cell).next();
        cfg.id_prefix = args.synth.id_prefix + "-c" + std::to_string(cell);
        emit(cfg);
        ++cell;
      }
    }
  } else {
    emit(args.synth);
  }

  if (args.format == "jsonl") {
    mosfit::write_dataset_jsonl(args.output, data);
  } else {
    mosfit::write_dataset_csv(args.output, data);
  }

  std::string truth_path = args.output + ".truth.csv";
  {
    std::ofstream out(truth_path, std::ios::binary);
    if (!out) throw mosfit::InputError("cannot write '" + truth_path + "'");
    out << "sample_id,mu_star,sigma_star\n";
    for (const auto& [id, ms] : truth) {
      out << id << ',' << mosfit::format_double(ms.first) << ','
          << mosfit::format_double(ms.second) << '\n';
    }
  }

  ordered_json cfg;
  cfg["mu_star"] = args.synth.mu_star;
  cfg["sigma_star"] = args.synth.sigma_star;
  if (!args.mu_grid.empty()) {
    cfg["mu_grid"] = args.mu_grid;
    cfg["sigma_grid"] = args.sigma_grid;
  }
  cfg["n_ratings"] = args.synth.n_ratings;
  cfg["n_samples"] = args.synth.n_samples;
  cfg["seed"] = args.synth.seed;
  cfg["scale_max"] = args.synth.scale_max;
  cfg["format"] = args.format;
  write_manifest(args.output, "simulate", cfg, {});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Opinion-rating aggregation, evaluation, and simulation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  AggregateArgs agg;
  auto* cmd_agg = app.add_subcommand(
      "aggregate", "Compute per-sample representative quality scores");
  cmd_agg->add_option("dataset", agg.dataset, "Ratings CSV/JSONL")->required();
  cmd_agg->add_option("--method", agg.method, "Aggregator")
      ->check(CLI::IsMember({"mos", "nlow", "latent"}));
  cmd_agg->add_option("-o,--output", agg.output, "Output CSV")->required();
  cmd_agg->add_option("--n-low", agg.n_low, "N for the N-lowest mean");
  cmd_agg->add_option("--beta", agg.fit.beta, "Sigma regularizer weight")
      ->check(CLI::NonNegativeNumber);
  cmd_agg->add_option("--max-iters", agg.fit.max_iters, "Iteration cap")
      ->check(CLI::PositiveNumber);
  cmd_agg->add_option("--sigma-min", agg.fit.sigma_min, "Sigma lower bound")
      ->check(CLI::PositiveNumber);
  cmd_agg->add_option("--scale-max", agg.fit.scale_max, "Rating scale max K")
      ->check(CLI::Range(2, 1000));
  cmd_agg->add_option("--jobs", agg.jobs, "Parallel workers")
      ->check(CLI::PositiveNumber);
  cmd_agg->add_option("--precision", agg.precision, "Significant digits")
      ->check(CLI::Range(1, 17));

  EvaluateArgs ev;
  auto* cmd_ev = app.add_subcommand(
      "evaluate", "Score predictions against references or preferences");
  cmd_ev->add_option("--pred", ev.pred, "Predictions CSV")->required();
  cmd_ev->add_option("--truth", ev.truth, "Reference scores CSV");
  cmd_ev->add_option("--mode", ev.mode, "Metric family")
      ->check(CLI::IsMember({"correlation", "ppref"}));
  cmd_ev->add_option("--pairs", ev.pairs, "Screened preference pairs CSV");
  cmd_ev->add_option("--annotations", ev.annotations,
                     "Raw preference annotations CSV");
  cmd_ev->add_option("--min-agree", ev.min_agree,
                     "Directional votes needed to keep a pair")
      ->check(CLI::PositiveNumber);
  cmd_ev->add_option("-o,--output", ev.output, "Report JSON path");

  SimulateArgs sim;
  auto* cmd_sim = app.add_subcommand(
      "simulate", "Generate synthetic rating datasets with known truth");
  cmd_sim->add_option("--mu", sim.synth.mu_star, "Latent mean");
  cmd_sim->add_option("--sigma", sim.synth.sigma_star, "Latent stddev")
      ->check(CLI::PositiveNumber);
  cmd_sim->add_option("--mu-grid", sim.mu_grid, "Grid of latent means")
      ->delimiter(',');
  cmd_sim->add_option("--sigma-grid", sim.sigma_grid, "Grid of latent stddevs")
      ->delimiter(',');
  cmd_sim->add_option("--n-ratings", sim.synth.n_ratings, "Ratings per sample")
      ->check(CLI::PositiveNumber);
  cmd_sim->add_option("--n-samples", sim.synth.n_samples,
                      "Samples (per grid cell when sweeping)")
      ->check(CLI::PositiveNumber);
  cmd_sim->add_option("--seed", sim.synth.seed, "RNG seed");
  cmd_sim->add_option("--scale-max", sim.synth.scale_max, "Rating scale max K")
      ->check(CLI::Range(2, 1000));
  cmd_sim->add_option("--id-prefix", sim.synth.id_prefix, "Sample id prefix");
  cmd_sim->add_option("--format", sim.format, "Dataset format")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  cmd_sim->add_option("-o,--output", sim.output, "Dataset path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_agg->parsed()) return run_aggregate(agg);
    if (cmd_ev->parsed()) return run_evaluate(ev);
    if (cmd_sim->parsed()) return run_simulate(sim);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mosfit::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
