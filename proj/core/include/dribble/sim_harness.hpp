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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "dribble/ball_dynamics.hpp"
#include "dribble/ball_filter.hpp"
#include "dribble/feedback_reference.hpp"
#include "dribble/gait_heuristic.hpp"
#include "dribble/reward_shaping.hpp"
#include "dribble/rng.hpp"
#include "dribble/scenario.hpp"

namespace dribble {

// Closed-loop constants of the planar stand-in for the joint-level policy.
inline constexpr double kMaxBodySpeed = 2.5;          // m/s
inline constexpr double kBodyTimeConstant = 0.2;      // s, velocity tracking lag
inline constexpr double kMaxYawRate = 3.0;            // rad/s
inline constexpr double kMaxFootSpeed = 2.0;          // m/s
inline constexpr double kFootServoTime = 0.1;         // s, target-tracking lag
inline constexpr double kPursuitGain = 1.0;           // 1/s, naive baseline
inline constexpr double kPursuitStandoff = 0.35;      // m, parking distance
inline constexpr double kStopEngageSpeed = 0.15;      // m/s, block vs park
inline constexpr double kInterceptGain = 2.0;         // 1/s, get-ahead drive
inline constexpr double kBlockLead = 0.25;            // m, plant when this far ahead
inline constexpr double kDodgeRadius = 0.30;          // m, swing-around clearance
inline constexpr double kGuidanceCap = 1.0;           // m/s, reference influence
inline constexpr double kGuidanceSpeedGate = 0.3;     // m/s, full weight above
inline constexpr double kGuidanceFloorWeight = 0.5;   // weight at rest
inline constexpr double kIntegralLeakTime = 2.0;      // s, drains stale windup
inline constexpr double kContactRadius = 0.11;        // m, ball radius + pad
inline constexpr double kTransferCoefficient = 0.8;   // contact impulse gain
inline constexpr double kSeparationLimit = 0.5;       // m, failure distance
inline constexpr double kStopSpeed = 0.05;            // m/s
inline constexpr double kStopHold = 1.0;              // s below kStopSpeed

// One-shot mid-episode disturbances, expressed as fractions of the episode
// so the schedule is independent of duration.
struct EventSchedule {
  double teleport_time_fraction = 0.5;
  Eigen::Vector2d teleport_offset{0.0, 0.0};
  double perturbation_time_fraction = 0.5;
  Eigen::Vector2d perturbation_velocity{0.0, 0.0};
  double camera_arrival_rate = 0.7;
  Eigen::Vector2d sampled_command{0.0, 0.0};
};

struct Randomization {
  TerrainParams terrain{};
  EventSchedule events{};
};

// Uniform draws over the configured ranges; deterministic in the seed.
Randomization sample_randomization(const RandomizationRanges& ranges,
                                   std::uint64_t seed);

struct TrajectoryRow {
  double t = 0.0;
  BallState ball{};
  Eigen::Vector2d robot_position{0.0, 0.0};
  double robot_yaw = 0.0;
  Eigen::Vector2d robot_velocity{0.0, 0.0};
  Eigen::Vector2d command{0.0, 0.0};
  Eigen::Vector2d v_ref{0.0, 0.0};
  BallState estimate{};
  RewardBreakdown reward{};
};

struct TrajectoryRecord {
  std::vector<TrajectoryRow> rows;
};

struct Metrics {
  double ate = 0.0;
  bool success = false;
  std::optional<double> time_to_stop{};
  double max_ball_dist = 0.0;
  std::uint64_t seed = 0;
};

struct ScenarioResult {
  TrajectoryRecord record;
  Metrics metrics;
};

struct WorldState {
  BallState ball{};
  RobotState robot{};
  FeedbackState feedback{};
  std::optional<FilterState> filter{};
  double time = 0.0;
};

// Baseline that just runs at the ball: cmd + k*(ball - robot), clamped.
Eigen::Vector2d naive_pursuit_target(const RobotState& robot,
                                     const BallState& ball,
                                     const Eigen::Vector2d& command);

// First-order velocity tracking toward the (speed-clamped) target, yaw
// turning toward heading_target, trot-gait feet servoed to their Raibert
// targets.
RobotState body_step(const RobotState& robot, const Eigen::Vector2d& v_target,
                     const Eigen::Vector2d& heading_target, double dt,
                     const GaitParams& params = {});

// Velocity impulse from the nearest approaching foot within kContactRadius;
// at most one impulse per call, ties broken by lowest foot index.
BallState contact_step(const RobotState& robot, const BallState& ball);

// Command active at time t (last keyframe with start_time <= t; zero before
// the first).
Eigen::Vector2d command_at(const std::vector<CommandKeyframe>& script,
                           double t);

// The randomization draw a scenario with this seed will use.
Randomization scenario_randomization(const ScenarioConfig& config);

// Terrain actually simulated: sampled when config.randomize, fixed otherwise.
TerrainParams effective_terrain(const ScenarioConfig& config);

// Synthetic ego-perception pipeline: renders noisy boxes from the true
// relative ball pose, runs both geometric models per camera, and fuses the
// slots with the Kalman filter. The frame at step 0 is forced so the filter
// can initialize from the first detection.
class SyntheticPerceptionPipeline {
 public:
  SyntheticPerceptionPipeline(const ScenarioConfig& config,
                              double arrival_rate, std::uint64_t seed);

  // Advances one frame and returns the fused estimate (world frame).
  BallState perceive(const Eigen::Vector2d& robot_position, double robot_yaw,
                     const BallState& true_ball, int step_index);

  // World-frame slot measurements of the most recent frame.
  const MeasurementSet& last_measurements() const { return last_; }
  bool initialized() const { return initialized_; }
  const FilterState& filter() const { return filter_; }

 private:
  ScenarioConfig config_;
  double arrival_rate_;
  Rng rng_;
  FilterState filter_{};
  MeasurementSet last_{};
  bool initialized_ = false;
};

// Runs the closed loop and records one row per control step plus the final
// state. Throws SimulationDivergedError if the state leaves the finite range.
ScenarioResult run_scenario(const ScenarioConfig& config);

// Mean over rows of |ball_velocity - command|.
double ate(const TrajectoryRecord& record);

// Tangential commands tracing a circle; the angular rate is snapped so a
// whole number of dt steps closes the loop exactly, which keeps the
// integrated script periodic to rounding error.
std::vector<CommandKeyframe> circle_command_script(double diameter,
                                                   double speed,
                                                   double duration, double dt);

// Nominal period pi*diameter/speed of the circle protocol.
double circle_period(double diameter, double speed);

// Piecewise-constant commands redrawn every `interval` seconds, uniform per
// axis over `range`; deterministic in the seed.
std::vector<CommandKeyframe> random_command_script(double duration,
                                                   double interval,
                                                   Range range,
                                                   std::uint64_t seed);

void write_trajectory_csv(const TrajectoryRecord& record, std::ostream& out);

std::string metrics_to_json(const Metrics& metrics);

}  // namespace dribble
