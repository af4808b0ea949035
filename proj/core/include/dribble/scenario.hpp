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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "dribble/ball_dynamics.hpp"
#include "dribble/ball_filter.hpp"
#include "dribble/feedback_reference.hpp"
#include "dribble/gait_heuristic.hpp"
#include "dribble/perception.hpp"
#include "dribble/reward_shaping.hpp"

namespace dribble {

enum class ControllerKind { FeedbackGuided, NaivePursuit };
enum class PerceptionMode { GroundTruth, SyntheticCameras };

const char* to_string(ControllerKind kind);
const char* to_string(PerceptionMode mode);

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

// Per-episode randomization ranges (the planar subset of the usual
// domain-randomization table).
struct RandomizationRanges {
  Range drag{-0.1, 0.5};                  // 1/s
  Range ball_mass{0.20, 0.40};            // kg
  Range teleport_distance{0.0, 1.0};      // m
  Range perturbation_velocity{0.0, 0.3};  // m/s
  Range camera_arrival_rate{0.3, 0.7};
  Range command{-1.5, 1.5};               // m/s per axis
};

struct CommandKeyframe {
  double start_time = 0.0;            // s
  Eigen::Vector2d command{0.0, 0.0};  // m/s, world frame
};

// Synthetic-camera noise and availability knobs.
struct PerceptionConfig {
  double pixel_noise_std = 1.0;     // px, on box center and size
  double velocity_noise_std = 0.1;  // m/s, on the velocity source
  double arrival_rate = 0.7;        // per-camera per-step frame probability
};

// Optional random-command protocol: when set and the command script is
// empty, a piecewise-constant script is synthesized from the run seed.
struct RandomCommandConfig {
  double interval = 10.0;       // s between redraws
  Range range{-1.0, 1.0};       // m/s per axis
};

struct InitialConditions {
  Eigen::Vector2d ball_offset{0.3, 0.0};    // m, ball start relative to robot
  Eigen::Vector2d ball_velocity{0.0, 0.0};  // m/s
  double jitter_radius = 0.05;              // m, seeded disk jitter on offset
};

struct ScenarioConfig {
  TerrainParams terrain{};
  ControllerKind controller = ControllerKind::FeedbackGuided;
  std::vector<CommandKeyframe> command_script{};
  std::optional<RandomCommandConfig> random_commands{};
  double duration = 10.0;  // s
  double dt = 0.02;        // s
  std::uint64_t seed = 0;
  PerceptionMode perception_mode = PerceptionMode::GroundTruth;
  bool randomize = false;       // sample terrain + arrival rate per seed
  bool events_enabled = false;  // fire teleport/perturbation mid-episode
  RandomizationRanges randomization{};
  FeedbackGains gains{};
  GaitParams gait{};
  RewardConfig reward{};
  NoiseConfig noise{};
  std::array<CameraModel, 2> cameras{CameraModel::forward_facing(),
                                     CameraModel::downward_facing()};
  PerceptionConfig perception{};
  InitialConditions initial{};
  double body_height = 0.30;                     // m
  double ball_diameter = kDefaultBallDiameter;   // m
};

// Throws ConfigError naming the offending key.
void validate(const ScenarioConfig& config);

// Parses the JSON scenario text; unknown or ill-typed keys raise ConfigError
// with the key path. Every key is optional and defaults as above.
ScenarioConfig parse_scenario_json(const std::string& text);

ScenarioConfig load_scenario_file(const std::filesystem::path& path);

std::string scenario_to_json(const ScenarioConfig& config);

}  // namespace dribble
