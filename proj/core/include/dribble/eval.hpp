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

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dribble/scenario.hpp"
#include "dribble/sim_harness.hpp"

namespace dribble {

struct RunSummary {
  std::uint64_t seed = 0;
  double drag = 0.0;
  double ate = 0.0;
  bool success = false;
  std::optional<double> time_to_stop{};
  double max_ball_dist = 0.0;
  bool diverged = false;
};

// Drag buckets: [-0.1, 0.1), [0.1, 0.3), [0.3, 0.5].
struct BucketStats {
  double drag_lo = 0.0;
  double drag_hi = 0.0;
  int count = 0;
  double success_rate = 0.0;
  double ate_median = 0.0;
  double ate_q25 = 0.0;
  double ate_q75 = 0.0;
};

struct BatchReport {
  std::string controller;
  int n_seeds = 0;
  std::uint64_t first_seed = 0;
  std::uint64_t last_seed = 0;
  std::array<BucketStats, 3> buckets{};
  std::vector<RunSummary> runs;
};

// Runs seeds 0..n_seeds-1 (all forced to *seed_override when given) on the
// base scenario and aggregates per drag bucket. Diverged runs are recorded
// as failures, never fatal.
BatchReport run_batch(const ScenarioConfig& base, int n_seeds,
                      std::optional<std::uint64_t> seed_override = {});

std::string batch_report_to_json(const BatchReport& report);

// One line per run: seed,drag,ate,success,time_to_stop,max_ball_dist,diverged.
void write_runs_csv(const BatchReport& report, std::ostream& out);

// Raw-vs-fused accuracy of the synthetic perception pipeline on a prescribed
// free-rolling ball watched by a static robot.
struct FilterBenchReport {
  std::array<double, 4> slot_rmse{};   // position slots, NaN when never seen
  std::array<int, 4> slot_counts{};
  double velocity_rmse = 0.0;
  double fused_rmse = 0.0;
  double final_trace_p = 0.0;
  bool fused_beats_min_slot = false;
};

FilterBenchReport run_filter_bench(const ScenarioConfig& config,
                                   std::uint64_t seed, int n_steps = 500);

std::string filter_bench_to_json(const FilterBenchReport& report);

// "Stable, eigenvalues 0, -0.5" for the stability subcommand.
std::string stability_line(double drag_coefficient);

}  // namespace dribble
