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

#include <Eigen/Core>

namespace dribble {

struct RewardConfig {
  double sigma_task = 0.25;       // ball-velocity tracking bandwidth
  double sigma_proximity = 1.0;   // robot-ball closeness bandwidth
  double sigma_feet = 0.02;       // m, feet-deviation gate of the shaping
  double proximity_weight = 0.3;
  double facing_weight = 0.3;
};

struct RewardBreakdown {
  double task = 0.0;
  double proximity = 0.0;
  double facing = 0.0;
  double base_total = 0.0;
  double shaped_total = 0.0;
};

// exp(-|ball_vel - cmd|^2 / sigma), in [0, 1].
double task_reward(const Eigen::Vector2d& ball_velocity,
                   const Eigen::Vector2d& command, double sigma_task = 0.25);

// exp(-|robot - ball|^2 / sigma), in [0, 1].
double proximity_reward(const Eigen::Vector2d& robot_position,
                        const Eigen::Vector2d& ball_position,
                        double sigma_proximity = 1.0);

// max(0, cos(angle between heading and robot->ball bearing)), in [0, 1].
// Positions must differ.
double facing_reward(double body_yaw, const Eigen::Vector2d& robot_position,
                     const Eigen::Vector2d& ball_position);

// Guidance shaping: exp(-feet_dev/sigma) * (base + exp(-|body_vel - v_ref|)).
double shape_reward(double base, const Eigen::Vector2d& body_velocity,
                    const Eigen::Vector2d& v_ref, double feet_deviation,
                    double sigma_feet = 0.02);

// base_total = task + w_prox*proximity + w_face*facing.
double base_total(const RewardBreakdown& parts, const RewardConfig& config);

}  // namespace dribble
