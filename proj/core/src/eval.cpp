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

#include "dribble/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "dribble/errors.hpp"

namespace dribble {

namespace {

double quantile(std::vector<double> values, double p) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  const double idx = p * static_cast<double>(values.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(idx));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = idx - static_cast<double>(lo);
  return values[lo] * (1.0 - frac) + values[hi] * frac;
}

int bucket_of(double drag) {
  if (drag < 0.1) return 0;
  if (drag < 0.3) return 1;
  return 2;
}

nlohmann::ordered_json number_or_null(double x) {
  if (std::isnan(x)) return nullptr;
  return x;
}

}  // namespace

BatchReport run_batch(const ScenarioConfig& base, int n_seeds,
                      std::optional<std::uint64_t> seed_override) {
  if (n_seeds < 1) {
    throw std::invalid_argument("run_batch: n_seeds must be >= 1");
  }
  BatchReport report;
  report.controller = to_string(base.controller);
  report.n_seeds = n_seeds;
  report.first_seed = seed_override.value_or(0);
  report.last_seed = seed_override.value_or(n_seeds - 1);
  report.runs.reserve(n_seeds);

  for (int i = 0; i < n_seeds; ++i) {
    ScenarioConfig config = base;
    config.seed = seed_override.value_or(static_cast<std::uint64_t>(i));
    RunSummary summary;
    summary.seed = config.seed;
    summary.drag = effective_terrain(config).drag_coefficient;
    try {
      const ScenarioResult result = run_scenario(config);
      summary.ate = result.metrics.ate;
      summary.success = result.metrics.success;
      summary.time_to_stop = result.metrics.time_to_stop;
      summary.max_ball_dist = result.metrics.max_ball_dist;
    } catch (const SimulationDivergedError&) {
      summary.diverged = true;
      summary.success = false;
      summary.ate = std::numeric_limits<double>::quiet_NaN();
      summary.max_ball_dist = std::numeric_limits<double>::infinity();
    }
    report.runs.push_back(summary);
  }

  const double edges[4] = {-0.1, 0.1, 0.3, 0.5};
  for (int b = 0; b < 3; ++b) {
    BucketStats& stats = report.buckets[b];
    stats.drag_lo = edges[b];
    stats.drag_hi = edges[b + 1];
    std::vector<double> ates;
    int successes = 0;
    for (const RunSummary& run : report.runs) {
      if (bucket_of(run.drag) != b) continue;
      ++stats.count;
      if (run.success) ++successes;
      if (!run.diverged) ates.push_back(run.ate);
    }
    stats.success_rate =
        stats.count == 0 ? std::numeric_limits<double>::quiet_NaN()
                         : static_cast<double>(successes) / stats.count;
    stats.ate_median = quantile(ates, 0.5);
    stats.ate_q25 = quantile(ates, 0.25);
    stats.ate_q75 = quantile(ates, 0.75);
  }
  return report;
}

std::string batch_report_to_json(const BatchReport& report) {
  nlohmann::ordered_json doc;
  doc["controller"] = report.controller;
  doc["n_seeds"] = report.n_seeds;
  doc["seed_range"] = {report.first_seed, report.last_seed};
  doc["buckets"] = nlohmann::ordered_json::array();
  for (const BucketStats& stats : report.buckets) {
    nlohmann::ordered_json b;
    b["drag_lo"] = stats.drag_lo;
    b["drag_hi"] = stats.drag_hi;
    b["count"] = stats.count;
    b["success_rate"] = number_or_null(stats.success_rate);
    b["ate_median"] = number_or_null(stats.ate_median);
    b["ate_q25"] = number_or_null(stats.ate_q25);
    b["ate_q75"] = number_or_null(stats.ate_q75);
    doc["buckets"].push_back(b);
  }
  return doc.dump(2);
}

void write_runs_csv(const BatchReport& report, std::ostream& out) {
  out << "seed,drag,ate,success,time_to_stop,max_ball_dist,diverged\n";
  char buf[32];
  const auto num = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  for (const RunSummary& run : report.runs) {
    out << run.seed << ',' << num(run.drag) << ',' << num(run.ate) << ','
        << (run.success ? 1 : 0) << ','
        << (run.time_to_stop ? num(*run.time_to_stop) : std::string()) << ','
        << num(run.max_ball_dist) << ',' << (run.diverged ? 1 : 0) << '\n';
  }
}

FilterBenchReport run_filter_bench(const ScenarioConfig& config,
                                   std::uint64_t seed, int n_steps) {
  if (n_steps < 1) {
    throw std::invalid_argument("run_filter_bench: n_steps must be >= 1");
  }
  ScenarioConfig bench = config;
  bench.seed = seed;
  const double arrival_rate =
      bench.randomize ? scenario_randomization(bench).events.camera_arrival_rate
                      : bench.perception.arrival_rate;
  SyntheticPerceptionPipeline pipeline(bench, arrival_rate,
                                       seed ^ 0x62656e6368ULL);

  // Static observer at the origin; the ball rolls past under drag.
  const Eigen::Vector2d robot_position{0.0, 0.0};
  BallState ball;
  ball.position = {2.5, 0.8};
  ball.velocity = {-0.5, -0.15};

  std::array<double, 4> slot_sq{};
  std::array<int, 4> slot_n{};
  double vel_sq = 0.0;
  int vel_n = 0;
  double fused_sq = 0.0;
  int fused_n = 0;
  FilterBenchReport report;

  for (int k = 0; k < n_steps; ++k) {
    const BallState estimate = pipeline.perceive(robot_position, 0.0, ball, k);
    const MeasurementSet& meas = pipeline.last_measurements();
    const std::array<const std::optional<Eigen::Vector2d>*, 4> slots{
        &meas.pos_angle_cam1, &meas.pos_angle_cam2, &meas.pos_center_cam1,
        &meas.pos_center_cam2};
    for (int s = 0; s < 4; ++s) {
      if (!slots[s]->has_value()) continue;
      slot_sq[s] += (**slots[s] - ball.position).squaredNorm();
      ++slot_n[s];
    }
    if (meas.vel_estimate) {
      vel_sq += (*meas.vel_estimate - ball.velocity).squaredNorm();
      ++vel_n;
    }
    if (pipeline.initialized() && k > 0) {
      fused_sq += (estimate.position - ball.position).squaredNorm();
      ++fused_n;
    }
    ball = step(ball, bench.terrain.drag_coefficient, bench.dt);
  }

  double min_slot = std::numeric_limits<double>::infinity();
  for (int s = 0; s < 4; ++s) {
    report.slot_counts[s] = slot_n[s];
    report.slot_rmse[s] = slot_n[s] == 0
                              ? std::numeric_limits<double>::quiet_NaN()
                              : std::sqrt(slot_sq[s] / slot_n[s]);
    if (slot_n[s] > 0) min_slot = std::min(min_slot, report.slot_rmse[s]);
  }
  report.velocity_rmse =
      vel_n == 0 ? std::numeric_limits<double>::quiet_NaN()
                 : std::sqrt(vel_sq / vel_n);
  report.fused_rmse = fused_n == 0
                          ? std::numeric_limits<double>::quiet_NaN()
                          : std::sqrt(fused_sq / fused_n);
  report.final_trace_p = pipeline.filter().P.trace();
  report.fused_beats_min_slot =
      std::isfinite(min_slot) && report.fused_rmse < min_slot;
  return report;
}

std::string filter_bench_to_json(const FilterBenchReport& report) {
  nlohmann::ordered_json doc;
  const char* names[4] = {"pos_angle_cam1", "pos_angle_cam2",
                          "pos_center_cam1", "pos_center_cam2"};
  doc["slots"] = nlohmann::ordered_json::object();
  for (int s = 0; s < 4; ++s) {
    doc["slots"][names[s]] = {{"rmse", number_or_null(report.slot_rmse[s])},
                              {"count", report.slot_counts[s]}};
  }
  doc["velocity_rmse"] = number_or_null(report.velocity_rmse);
  doc["fused_rmse"] = number_or_null(report.fused_rmse);
  doc["final_trace_p"] = report.final_trace_p;
  doc["fused_beats_min_slot"] = report.fused_beats_min_slot;
  return doc.dump(2);
}

std::string stability_line(double drag_coefficient) {
  const StabilityClass cls = classify_stability(drag_coefficient);
  const double eigenvalue =
      drag_coefficient == 0.0 ? 0.0 : -drag_coefficient;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%s, eigenvalues 0, %g", to_string(cls),
                eigenvalue);
  return buf;
}

}  // namespace dribble
