// Copyright 2026 The Dribble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dribble/errors.hpp"
#include "dribble/eval.hpp"
#include "dribble/scenario.hpp"
#include "dribble/sim_harness.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDiverged = 2;

std::optional<std::uint64_t> seed_override_from_env() {
  const char* raw = std::getenv("SEED_OVERRIDE");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') {
    throw dribble::ConfigError("SEED_OVERRIDE", "must be an unsigned integer");
  }
  return static_cast<std::uint64_t>(value);
}

dribble::ScenarioConfig load_config(const std::string& path,
                                    const std::optional<std::string>& controller,
                                    const std::optional<double>& drag) {
  dribble::ScenarioConfig config = dribble::load_scenario_file(path);
  if (controller) {
    config.controller = *controller == "naive"
                            ? dribble::ControllerKind::NaivePursuit
                            : dribble::ControllerKind::FeedbackGuided;
  }
  if (drag) {
    // A command-line drag pins the terrain for every run.
    config.terrain.drag_coefficient = *drag;
    config.randomize = false;
  }
  if (const auto seed = seed_override_from_env()) {
    config.seed = *seed;
  }
  return config;
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << contents;
}

int cmd_simulate(const std::string& config_path,
                 const std::optional<std::string>& controller,
                 const std::optional<double>& drag, const std::string& out_dir) {
  const dribble::ScenarioConfig config =
      load_config(config_path, controller, drag);
  const dribble::ScenarioResult result = dribble::run_scenario(config);

  fs::create_directories(out_dir);
  {
    std::ofstream csv(fs::path(out_dir) / "trajectory.csv", std::ios::binary);
    if (!csv) {
      throw std::runtime_error("cannot write trajectory.csv in " + out_dir);
    }
    dribble::write_trajectory_csv(result.record, csv);
  }
  write_file(fs::path(out_dir) / "metrics.json",
             dribble::metrics_to_json(result.metrics) + "\n");
  std::cout << dribble::metrics_to_json(result.metrics) << "\n";
  return kExitOk;
}

int cmd_batch(const std::string& config_path,
              const std::optional<std::string>& controller,
              const std::optional<double>& drag, int n_seeds,
              const std::string& out_dir) {
  const dribble::ScenarioConfig config =
      load_config(config_path, controller, drag);
  const dribble::BatchReport report =
      dribble::run_batch(config, n_seeds, seed_override_from_env());

  fs::create_directories(out_dir);
  write_file(fs::path(out_dir) / "batch_report.json",
             dribble::batch_report_to_json(report) + "\n");
  {
    std::ofstream csv(fs::path(out_dir) / "runs.csv", std::ios::binary);
    if (!csv) {
      throw std::runtime_error("cannot write runs.csv in " + out_dir);
    }
    dribble::write_runs_csv(report, csv);
  }
  std::cout << dribble::batch_report_to_json(report) << "\n";
  return kExitOk;
}

int cmd_filter_bench(const std::string& config_path,
                     const std::optional<double>& drag, int n_seeds,
                     const std::optional<std::string>& out_dir) {
  const dribble::ScenarioConfig config =
      load_config(config_path, std::nullopt, drag);
  const auto env_seed = seed_override_from_env();

  std::string payload;
  if (n_seeds <= 1) {
    const dribble::FilterBenchReport report =
        dribble::run_filter_bench(config, env_seed.value_or(config.seed));
    payload = dribble::filter_bench_to_json(report);
  } else {
    int beats = 0;
    std::vector<double> fused;
    fused.reserve(n_seeds);
    for (int i = 0; i < n_seeds; ++i) {
      const dribble::FilterBenchReport report = dribble::run_filter_bench(
          config, env_seed.value_or(static_cast<std::uint64_t>(i)));
      if (report.fused_beats_min_slot) ++beats;
      fused.push_back(report.fused_rmse);
    }
    std::sort(fused.begin(), fused.end());
    nlohmann::ordered_json doc;
    doc["n_seeds"] = n_seeds;
    doc["fused_beats_min_slot_rate"] =
        static_cast<double>(beats) / static_cast<double>(n_seeds);
    doc["fused_rmse_median"] = fused[fused.size() / 2];
    payload = doc.dump(2);
  }
  std::cout << payload << "\n";
  if (out_dir) {
    fs::create_directories(*out_dir);
    write_file(fs::path(*out_dir) / "filter_bench.json", payload + "\n");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar legged ball-dribbling simulator and evaluation suite"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  std::optional<std::string> controller;
  std::optional<double> drag;
  int n_seeds = 200;
  double stability_drag = 0.0;

  auto add_common = [&](CLI::App* sub, bool with_controller) {
    sub->add_option("--config", config_path, "Scenario JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--drag", drag,
                    "Override terrain.drag_coefficient and disable "
                    "randomization");
    if (with_controller) {
      sub->add_option("--controller", controller,
                      "Override the scenario controller")
          ->check(CLI::IsMember({"feedback", "naive"}));
    }
  };

  CLI::App* simulate =
      app.add_subcommand("simulate",
                         "Run one scenario; writes trajectory.csv and "
                         "metrics.json to --out");
  add_common(simulate, true);
  simulate->add_option("--out", out_dir, "Output directory");

  CLI::App* batch = app.add_subcommand(
      "batch", "Run a seed sweep; writes batch_report.json and runs.csv");
  add_common(batch, true);
  batch->add_option("--seeds", n_seeds, "Number of seeds (0..n-1)")
      ->check(CLI::PositiveNumber);
  batch->add_option("--out", out_dir, "Output directory");

  CLI::App* bench = app.add_subcommand(
      "filter-bench",
      "Raw vs fused estimation error of the synthetic perception pipeline");
  add_common(bench, false);
  std::optional<std::string> bench_out;
  bench->add_option("--seeds", n_seeds, "Aggregate over this many seeds")
      ->check(CLI::PositiveNumber);
  bench->add_option("--out", bench_out, "Also write filter_bench.json here");

  CLI::App* stability = app.add_subcommand(
      "stability", "Classify a ball-terrain drag coefficient");
  stability->add_option("drag", stability_drag, "Drag coefficient, 1/s")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) {
      return cmd_simulate(config_path, controller, drag, out_dir);
    }
    if (batch->parsed()) {
      return cmd_batch(config_path, controller, drag, n_seeds, out_dir);
    }
    if (bench->parsed()) {
      return cmd_filter_bench(config_path, drag, n_seeds, bench_out);
    }
    if (stability->parsed()) {
      std::cout << dribble::stability_line(stability_drag) << "\n";
      return kExitOk;
    }
  } catch (const dribble::ConfigError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const dribble::SimulationDivergedError& err) {
    std::cerr << "error: " << err.what() << " (step " << err.step << ")\n";
    return kExitDiverged;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
