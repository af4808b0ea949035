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

#include "dribble/sim_harness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <Eigen/Geometry>
#include <nlohmann/json.hpp>

#include "dribble/errors.hpp"
#include "dribble/perception.hpp"
#include "dribble/rng.hpp"

namespace dribble {

namespace {

// Stream tags keep the per-concern RNG sequences decoupled from each other.
constexpr std::uint64_t kStreamRandomization = 0x72616e64'00000001ULL;
constexpr std::uint64_t kStreamInitial = 0x72616e64'00000002ULL;
constexpr std::uint64_t kStreamPerception = 0x72616e64'00000003ULL;
constexpr std::uint64_t kStreamCommands = 0x72616e64'00000004ULL;

Eigen::Vector2d clamp_norm(const Eigen::Vector2d& v, double max_norm) {
  const double n = v.norm();
  if (n > max_norm) return v * (max_norm / n);
  return v;
}

double sample_range(Rng& rng, const Range& range, const char* name) {
  if (range.hi < range.lo) {
    throw std::invalid_argument(std::string("sample_randomization: empty range ") +
                                name);
  }
  return rng.uniform(range.lo, range.hi);
}

bool finite(const WorldState& world) {
  if (!world.ball.position.allFinite() || !world.ball.velocity.allFinite())
    return false;
  if (!world.robot.body_position.allFinite() ||
      !world.robot.body_velocity.allFinite() ||
      !std::isfinite(world.robot.body_yaw))
    return false;
  for (const auto& f : world.robot.foot_positions)
    if (!f.allFinite()) return false;
  return true;
}

RewardBreakdown compute_rewards(const WorldState& world,
                                const Eigen::Vector2d& cmd,
                                const Eigen::Vector2d& v_ref,
                                const ScenarioConfig& config) {
  RewardBreakdown r;
  r.task = task_reward(world.ball.velocity, cmd, config.reward.sigma_task);
  r.proximity = proximity_reward(world.robot.body_position,
                                 world.ball.position,
                                 config.reward.sigma_proximity);
  const double dist =
      (world.ball.position - world.robot.body_position).norm();
  // A robot standing exactly on the ball counts as facing it.
  r.facing = dist == 0.0
                 ? 1.0
                 : facing_reward(world.robot.body_yaw,
                                 world.robot.body_position,
                                 world.ball.position);
  r.base_total = base_total(r, config.reward);
  const double dp = feet_deviation(world.robot, v_ref, world.ball.position,
                                   config.gait);
  r.shaped_total = shape_reward(r.base_total, world.robot.body_velocity, v_ref,
                                dp, config.reward.sigma_feet);
  return r;
}

// Scripted stand-in for the learned policy, guided variant. The task drive
// pursues the ball while a command is active. Under a zero command it runs
// a stop maneuver: swing around the rolling ball on its own side, take the
// intercept point ahead of the path, then plant and let the ball run into
// the feet; once the ball is quiet it parks at a standoff. The feedback
// reference rides on top as a norm-bounded correction whose weight ramps
// with ball speed, off while planted or parked.
class GuidedController {
 public:
  explicit GuidedController(const FeedbackGains& gains) {
    feedback_.gains = gains;
  }

  struct Output {
    Eigen::Vector2d v_ref{0.0, 0.0};     // raw feedback reference
    Eigen::Vector2d v_target{0.0, 0.0};  // composed body-velocity target
    bool freeze_heading = false;
  };

  Output step(const BallState& estimate, const RobotState& robot,
              const Eigen::Vector2d& cmd, double dt) {
    Output out;
    out.v_ref = compute_reference(feedback_, estimate.velocity,
                                  robot.body_velocity, cmd);
    feedback_ = accumulate(feedback_, estimate.velocity, robot.body_velocity,
                           dt);
    // Slow leak: once the velocities re-match the plant never works the
    // accumulated offset off, and a ratcheted integral would hog the
    // bounded guidance budget for the rest of the episode.
    feedback_.integral *= std::exp(-dt / kIntegralLeakTime);

    const double ball_speed = estimate.velocity.norm();
    double guidance_weight = std::min(
        1.0,
        std::max(kGuidanceFloorWeight, ball_speed / kGuidanceSpeedGate));
    Eigen::Vector2d task{0.0, 0.0};

    if (!cmd.isZero(0.0)) {
      planted_ = false;
      dodge_side_ = 0.0;
      task = cmd + kPursuitGain * (estimate.position - robot.body_position);
    } else if (ball_speed <= kStopEngageSpeed) {
      planted_ = false;
      dodge_side_ = 0.0;
      guidance_weight = 0.0;
      const Eigen::Vector2d offset =
          estimate.position - robot.body_position;
      const double gap = offset.norm();
      if (gap > kPursuitStandoff) {
        task = kPursuitGain * (gap - kPursuitStandoff) * (offset / gap);
      }
    } else {
      const Eigen::Vector2d dir = estimate.velocity / ball_speed;
      const Eigen::Vector2d rel = robot.body_position - estimate.position;
      const double ahead = rel.dot(dir);
      if (planted_ && ahead < -0.05) planted_ = false;
      if (!planted_ && ahead > kBlockLead) planted_ = true;
      if (planted_) {
        dodge_side_ = 0.0;
        guidance_weight = 0.0;
        out.freeze_heading = true;
      } else {
        // The dodge side sticks for the whole maneuver; re-deciding it every
        // step flickers when the robot sits dead behind the ball.
        if (dodge_side_ == 0.0) {
          const double lateral = dir.x() * rel.y() - dir.y() * rel.x();
          dodge_side_ = lateral >= 0.0 ? 1.0 : -1.0;
        }
        const Eigen::Vector2d left{-dir.y(), dir.x()};
        Eigen::Vector2d aim;
        if (ahead < 0.1) {
          // Still behind: pass the ball on the side we are already on.
          aim = estimate.position + dodge_side_ * kDodgeRadius * left +
                0.1 * dir;
        } else {
          aim = estimate.position + kPursuitStandoff * dir;
        }
        // Ball-velocity feed-forward; a bare P drive would trail a moving
        // aim point by ball_speed/gain and never complete the pass.
        task = estimate.velocity + kInterceptGain * (aim - robot.body_position);
      }
    }
    out.v_target = task + guidance_weight * clamp_norm(out.v_ref, kGuidanceCap);
    return out;
  }

  const FeedbackState& feedback() const { return feedback_; }

 private:
  FeedbackState feedback_{};
  bool planted_ = false;
  double dodge_side_ = 0.0;
};

// First time from which the commanded velocity stays zero, if any.
std::optional<double> stop_command_time(
    const std::vector<CommandKeyframe>& script) {
  if (script.empty()) return 0.0;
  if (!script.back().command.isZero(0.0)) return std::nullopt;
  double t = script.back().start_time;
  for (auto it = script.rbegin(); it != script.rend(); ++it) {
    if (!it->command.isZero(0.0)) break;
    t = it->start_time;
  }
  return t;
}

Metrics compute_metrics(const TrajectoryRecord& record,
                        const std::vector<CommandKeyframe>& script,
                        double dt, std::uint64_t seed) {
  Metrics metrics;
  metrics.seed = seed;
  metrics.ate = ate(record);
  double max_dist = 0.0;
  for (const TrajectoryRow& row : record.rows) {
    max_dist = std::max(max_dist,
                        (row.ball.position - row.robot_position).norm());
  }
  metrics.max_ball_dist = max_dist;
  metrics.success = max_dist <= kSeparationLimit;

  const std::optional<double> stop_time = stop_command_time(script);
  if (stop_time) {
    const int hold_rows = static_cast<int>(std::ceil(kStopHold / dt));
    int quiet = 0;
    for (const TrajectoryRow& row : record.rows) {
      if (row.t < *stop_time) continue;
      if (row.ball.velocity.norm() < kStopSpeed) {
        ++quiet;
        if (quiet > hold_rows) {  // quiet span of hold_rows*dt seconds
          metrics.time_to_stop = row.t - hold_rows * dt;
          break;
        }
      } else {
        quiet = 0;
      }
    }
  }
  return metrics;
}

}  // namespace

SyntheticPerceptionPipeline::SyntheticPerceptionPipeline(
    const ScenarioConfig& config, double arrival_rate, std::uint64_t seed)
    : config_(config), arrival_rate_(arrival_rate), rng_(seed) {}

BallState SyntheticPerceptionPipeline::perceive(
    const Eigen::Vector2d& robot_position, double robot_yaw,
    const BallState& true_ball, int step_index) {
  const Eigen::Rotation2Dd to_world(robot_yaw);
  const Eigen::Rotation2Dd to_body(-robot_yaw);
  const Eigen::Vector2d rel = to_body * (true_ball.position - robot_position);
  const double ball_radius = config_.ball_diameter / 2.0;
  const Eigen::Vector3d ball_body(rel.x(), rel.y(),
                                  ball_radius - config_.body_height);
  last_ = MeasurementSet{};

  std::array<std::optional<BoundingBox>, 2> boxes;
  for (int c = 0; c < 2; ++c) {
    const bool arrived = step_index == 0 || rng_.bernoulli(arrival_rate_);
    if (!arrived) continue;
    std::optional<BoundingBox> box;
    try {
      box = synthetic_bbox(ball_body, config_.cameras[c],
                           config_.ball_diameter);
    } catch (const GeometryError&) {
      continue;
    }
    if (!box) continue;
    const Eigen::Vector2d center =
        bbox_center(*box) + rng_.normal2(config_.perception.pixel_noise_std);
    double half = (box->x_max - box->x_min) / 2.0 +
                  rng_.normal(config_.perception.pixel_noise_std) / 2.0;
    half = std::max(half, 0.5);
    BoundingBox noisy;
    noisy.x_min = center.x() - half;
    noisy.x_max = center.x() + half;
    noisy.y_min = center.y() - half;
    noisy.y_max = center.y() + half;
    const double true_dist =
        (ball_body - config_.cameras[c].mount_position).norm();
    noisy.confidence = 1.0 / (1.0 + true_dist);
    boxes[c] = noisy;
  }

  if (!initialized_) {
    if (boxes[0] || boxes[1]) {
      FilterState fs = init_filter(boxes[0], boxes[1], config_.cameras[0],
                                   config_.cameras[1], config_.ball_diameter);
      fs.x.head<2>() = robot_position + to_world * fs.x.head<2>().eval();
      filter_ = fs;
      initialized_ = true;
    } else {
      // Nothing seen yet: hold an at-the-robot estimate.
      return BallState{robot_position, {0.0, 0.0}};
    }
  } else {
    const auto slot_from_angle =
        [&](const BoundingBox& box,
            const CameraModel& cam) -> std::optional<Eigen::Vector2d> {
      try {
        const Eigen::Vector2d body =
            viewing_angle_position(box, cam, config_.ball_diameter).head<2>();
        return robot_position + to_world * body;
      } catch (const GeometryError&) {
        return std::nullopt;
      }
    };
    const auto slot_from_center =
        [&](const BoundingBox& box,
            const CameraModel& cam) -> std::optional<Eigen::Vector2d> {
      try {
        const Eigen::Vector2d body = projection_intersection(
            bbox_center(box), cam, config_.body_height, ball_radius);
        return robot_position + to_world * body;
      } catch (const GeometryError&) {
        return std::nullopt;
      }
    };
    if (boxes[0]) {
      last_.pos_angle_cam1 = slot_from_angle(*boxes[0], config_.cameras[0]);
      last_.pos_center_cam1 = slot_from_center(*boxes[0], config_.cameras[0]);
    }
    if (boxes[1]) {
      last_.pos_angle_cam2 = slot_from_angle(*boxes[1], config_.cameras[1]);
      last_.pos_center_cam2 = slot_from_center(*boxes[1], config_.cameras[1]);
    }
    // Velocity source stands in for the learned estimator; it is always on.
    last_.vel_estimate = true_ball.velocity +
                         rng_.normal2(config_.perception.velocity_noise_std);
    filter_ = step(filter_, config_.dt, last_, config_.noise);
  }
  return BallState{filter_.x.head<2>(), filter_.x.tail<2>()};
}

Randomization scenario_randomization(const ScenarioConfig& config) {
  return sample_randomization(config.randomization,
                              config.seed ^ kStreamRandomization);
}

TerrainParams effective_terrain(const ScenarioConfig& config) {
  return config.randomize ? scenario_randomization(config).terrain
                          : config.terrain;
}

Randomization sample_randomization(const RandomizationRanges& ranges,
                                   std::uint64_t seed) {
  Rng rng(seed);
  Randomization out;
  out.terrain.drag_coefficient = sample_range(rng, ranges.drag, "drag");
  out.terrain.ball_mass = sample_range(rng, ranges.ball_mass, "ball_mass");
  const double teleport =
      sample_range(rng, ranges.teleport_distance, "teleport_distance");
  out.events.teleport_offset = teleport * rng.unit_vector();
  out.events.teleport_time_fraction = rng.uniform(0.25, 0.75);
  const double perturbation = sample_range(rng, ranges.perturbation_velocity,
                                           "perturbation_velocity");
  out.events.perturbation_velocity = perturbation * rng.unit_vector();
  out.events.perturbation_time_fraction = rng.uniform(0.25, 0.75);
  out.events.camera_arrival_rate =
      sample_range(rng, ranges.camera_arrival_rate, "camera_arrival_rate");
  out.events.sampled_command = {sample_range(rng, ranges.command, "command"),
                                sample_range(rng, ranges.command, "command")};
  return out;
}

Eigen::Vector2d naive_pursuit_target(const RobotState& robot,
                                     const BallState& ball,
                                     const Eigen::Vector2d& command) {
  const Eigen::Vector2d target =
      command + kPursuitGain * (ball.position - robot.body_position);
  return clamp_norm(target, kMaxBodySpeed);
}

RobotState body_step(const RobotState& robot, const Eigen::Vector2d& v_target,
                     const Eigen::Vector2d& heading_target, double dt,
                     const GaitParams& params) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("body_step: dt must be > 0");
  }
  RobotState next = robot;

  const Eigen::Vector2d target = clamp_norm(v_target, kMaxBodySpeed);
  next.body_velocity =
      robot.body_velocity + (target - robot.body_velocity) * (dt / kBodyTimeConstant);
  next.body_position = robot.body_position + next.body_velocity * dt;

  const Eigen::Vector2d to_ball = heading_target - robot.body_position;
  if (to_ball.norm() > 0.05) {  // hold yaw when the bearing is ill-conditioned
    const double bearing = std::atan2(to_ball.y(), to_ball.x());
    const double delta = wrap_angle(bearing - robot.body_yaw);
    const double turn = std::clamp(delta, -kMaxYawRate * dt, kMaxYawRate * dt);
    next.body_yaw = wrap_angle(robot.body_yaw + turn);
  }

  next.clock.phase = std::fmod(robot.clock.phase + dt / robot.clock.period, 1.0);

  // Planar leg abstraction: each foot continuously servos onto its Raibert
  // target, so contact velocities stay aligned with body travel instead of
  // the swing-phase repositioning sweeps a full gait simulation would add.
  for (int i = 0; i < 4; ++i) {
    const Eigen::Vector2d foot_target = raibert_target(next, target, i, params);
    Eigen::Vector2d vel = (foot_target - robot.foot_positions[i]) /
                          std::max(kFootServoTime, dt);
    vel = clamp_norm(vel, kMaxFootSpeed);
    next.foot_velocities[i] = vel;
    next.foot_positions[i] = robot.foot_positions[i] + vel * dt;
  }
  return next;
}

BallState contact_step(const RobotState& robot, const BallState& ball) {
  int best = -1;
  double best_dist = kContactRadius;
  for (int i = 0; i < 4; ++i) {
    const Eigen::Vector2d offset = ball.position - robot.foot_positions[i];
    const double dist = offset.norm();
    if (dist < 1e-12 || dist >= best_dist) continue;
    const Eigen::Vector2d normal = offset / dist;
    const double approach =
        (robot.foot_velocities[i] - ball.velocity).dot(normal);
    if (approach <= 0.0) continue;
    best = i;
    best_dist = dist;
  }
  if (best < 0) return ball;

  const Eigen::Vector2d offset = ball.position - robot.foot_positions[best];
  const Eigen::Vector2d normal = offset / offset.norm();
  const double approach =
      (robot.foot_velocities[best] - ball.velocity).dot(normal);
  BallState next = ball;
  next.velocity += kTransferCoefficient * approach * normal;
  return next;
}

Eigen::Vector2d command_at(const std::vector<CommandKeyframe>& script,
                           double t) {
  Eigen::Vector2d cmd{0.0, 0.0};
  for (const CommandKeyframe& frame : script) {
    if (frame.start_time > t) break;
    cmd = frame.command;
  }
  return cmd;
}

ScenarioResult run_scenario(const ScenarioConfig& config) {
  validate(config);

  const Randomization rand = scenario_randomization(config);
  const TerrainParams terrain = config.randomize ? rand.terrain : config.terrain;
  const double arrival_rate = config.randomize
                                  ? rand.events.camera_arrival_rate
                                  : config.perception.arrival_rate;

  std::vector<CommandKeyframe> script = config.command_script;
  if (script.empty() && config.random_commands) {
    script = random_command_script(config.duration,
                                   config.random_commands->interval,
                                   config.random_commands->range,
                                   config.seed ^ kStreamCommands);
  }

  Rng init_rng(config.seed ^ kStreamInitial);

  WorldState world;
  world.robot.clock =
      GaitClock{0.0, config.gait.period, config.gait.duty_factor};
  for (int i = 0; i < 4; ++i) {
    world.robot.foot_positions[i] = hip_offset(config.gait, i);
    world.robot.foot_velocities[i].setZero();
  }
  world.feedback.gains = config.gains;
  world.ball.position =
      config.initial.ball_offset + init_rng.disk(config.initial.jitter_radius);
  world.ball.velocity = config.initial.ball_velocity;

  SyntheticPerceptionPipeline perception(config, arrival_rate,
                                         config.seed ^ kStreamPerception);
  GuidedController guided(config.gains);

  const int steps =
      static_cast<int>(std::floor(config.duration / config.dt + 1e-9));
  TrajectoryRecord record;
  record.rows.reserve(steps + 1);

  bool teleport_pending = config.events_enabled;
  bool perturbation_pending = config.events_enabled;
  const double teleport_time =
      rand.events.teleport_time_fraction * config.duration;
  const double perturbation_time =
      rand.events.perturbation_time_fraction * config.duration;

  for (int k = 0; k <= steps; ++k) {
    const double t = k * config.dt;
    world.time = t;

    if (teleport_pending && t >= teleport_time) {
      world.ball.position += rand.events.teleport_offset;
      teleport_pending = false;
    }
    if (perturbation_pending && t >= perturbation_time) {
      world.ball.velocity += rand.events.perturbation_velocity;
      perturbation_pending = false;
    }

    const Eigen::Vector2d cmd = command_at(script, t);

    BallState estimate;
    if (config.perception_mode == PerceptionMode::GroundTruth) {
      estimate = world.ball;
    } else {
      estimate = perception.perceive(world.robot.body_position,
                                     world.robot.body_yaw, world.ball, k);
    }

    Eigen::Vector2d v_ref;
    Eigen::Vector2d v_target;
    bool freeze_heading = false;
    if (config.controller == ControllerKind::FeedbackGuided) {
      const GuidedController::Output out =
          guided.step(estimate, world.robot, cmd, config.dt);
      v_ref = out.v_ref;
      v_target = out.v_target;
      freeze_heading = out.freeze_heading;
      world.feedback = guided.feedback();
    } else {
      v_ref = naive_pursuit_target(world.robot, estimate, cmd);
      v_target = v_ref;
    }

    TrajectoryRow row;
    row.t = t;
    row.ball = world.ball;
    row.robot_position = world.robot.body_position;
    row.robot_yaw = world.robot.body_yaw;
    row.robot_velocity = world.robot.body_velocity;
    row.command = cmd;
    row.v_ref = v_ref;
    row.estimate = estimate;
    row.reward = compute_rewards(world, cmd, v_ref, config);
    record.rows.push_back(row);

    if (k == steps) break;

    const Eigen::Vector2d heading_target =
        freeze_heading
            ? Eigen::Vector2d(world.robot.body_position +
                              Eigen::Vector2d{std::cos(world.robot.body_yaw),
                                              std::sin(world.robot.body_yaw)})
            : estimate.position;
    world.robot = body_step(world.robot, v_target, heading_target, config.dt,
                            config.gait);
    world.ball = contact_step(world.robot, world.ball);
    world.ball = step(world.ball, terrain.drag_coefficient, config.dt);

    if (!finite(world)) {
      throw SimulationDivergedError("run_scenario: state became non-finite",
                                    k);
    }
  }

  ScenarioResult result;
  result.metrics = compute_metrics(record, script, config.dt, config.seed);
  result.record = std::move(record);
  return result;
}

double ate(const TrajectoryRecord& record) {
  if (record.rows.empty()) {
    throw std::invalid_argument("ate: empty record");
  }
  double sum = 0.0;
  for (const TrajectoryRow& row : record.rows) {
    sum += (row.ball.velocity - row.command).norm();
  }
  return sum / static_cast<double>(record.rows.size());
}

double circle_period(double diameter, double speed) {
  if (!(diameter > 0.0) || !(speed > 0.0)) {
    throw std::invalid_argument("circle_period: diameter and speed must be > 0");
  }
  return M_PI * diameter / speed;
}

std::vector<CommandKeyframe> circle_command_script(double diameter,
                                                   double speed,
                                                   double duration,
                                                   double dt) {
  if (!(diameter > 0.0) || !(speed > 0.0)) {
    throw std::invalid_argument(
        "circle_command_script: diameter and speed must be > 0");
  }
  if (!(dt > 0.0) || duration < 0.0) {
    throw std::invalid_argument("circle_command_script: bad duration or dt");
  }
  const double nominal_period = circle_period(diameter, speed);
  const long steps_per_lap = std::max<long>(1, std::lround(nominal_period / dt));
  const double omega = 2.0 * M_PI / (static_cast<double>(steps_per_lap) * dt);

  // Chord directions between consecutive samples of the circle; every chord
  // has the same length, so scaling them all to |cmd| = speed keeps the
  // zero-order-hold integral of the script exactly closed after one lap.
  const int n = static_cast<int>(std::floor(duration / dt + 1e-9));
  std::vector<CommandKeyframe> script;
  script.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double a0 = omega * k * dt;
    const double a1 = omega * (k + 1) * dt;
    const Eigen::Vector2d chord{std::sin(a1) - std::sin(a0),
                                std::cos(a0) - std::cos(a1)};
    script.push_back({k * dt, speed * chord.normalized()});
  }
  return script;
}

std::vector<CommandKeyframe> random_command_script(double duration,
                                                   double interval,
                                                   Range range,
                                                   std::uint64_t seed) {
  if (!(interval > 0.0) || duration < 0.0) {
    throw std::invalid_argument("random_command_script: bad duration or interval");
  }
  Rng rng(seed);
  std::vector<CommandKeyframe> script;
  for (double t = 0.0; t < duration; t += interval) {
    script.push_back({t,
                      {rng.uniform(range.lo, range.hi),
                       rng.uniform(range.lo, range.hi)}});
  }
  return script;
}

void write_trajectory_csv(const TrajectoryRecord& record, std::ostream& out) {
  out << "t,ball_px,ball_py,ball_vx,ball_vy,robot_px,robot_py,robot_yaw,"
         "cmd_x,cmd_y,vref_x,vref_y,est_px,est_py,est_vx,est_vy,"
         "reward_base,reward_shaped\n";
  char buf[32];
  const auto field = [&](double v, char sep) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << buf << sep;
  };
  for (const TrajectoryRow& row : record.rows) {
    field(row.t, ',');
    field(row.ball.position.x(), ',');
    field(row.ball.position.y(), ',');
    field(row.ball.velocity.x(), ',');
    field(row.ball.velocity.y(), ',');
    field(row.robot_position.x(), ',');
    field(row.robot_position.y(), ',');
    field(row.robot_yaw, ',');
    field(row.command.x(), ',');
    field(row.command.y(), ',');
    field(row.v_ref.x(), ',');
    field(row.v_ref.y(), ',');
    field(row.estimate.position.x(), ',');
    field(row.estimate.position.y(), ',');
    field(row.estimate.velocity.x(), ',');
    field(row.estimate.velocity.y(), ',');
    field(row.reward.base_total, ',');
    field(row.reward.shaped_total, '\n');
  }
}

std::string metrics_to_json(const Metrics& metrics) {
  nlohmann::ordered_json doc;
  doc["ate"] = metrics.ate;
  doc["success"] = metrics.success;
  if (metrics.time_to_stop) {
    doc["time_to_stop"] = *metrics.time_to_stop;
  } else {
    doc["time_to_stop"] = nullptr;
  }
  doc["max_ball_dist"] = metrics.max_ball_dist;
  doc["seed"] = metrics.seed;
  return doc.dump(2);
}

}  // namespace dribble
