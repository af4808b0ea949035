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

#include "dribble/reward_shaping.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dribble {

double task_reward(const Eigen::Vector2d& ball_velocity,
                   const Eigen::Vector2d& command, double sigma_task) {
  if (!ball_velocity.allFinite() || !command.allFinite()) {
    throw std::invalid_argument("task_reward: non-finite input");
  }
  return std::exp(-(ball_velocity - command).squaredNorm() / sigma_task);
}

double proximity_reward(const Eigen::Vector2d& robot_position,
                        const Eigen::Vector2d& ball_position,
                        double sigma_proximity) {
  if (!robot_position.allFinite() || !ball_position.allFinite()) {
    throw std::invalid_argument("proximity_reward: non-finite input");
  }
  return std::exp(-(robot_position - ball_position).squaredNorm() /
                  sigma_proximity);
}

double facing_reward(double body_yaw, const Eigen::Vector2d& robot_position,
                     const Eigen::Vector2d& ball_position) {
  const Eigen::Vector2d offset = ball_position - robot_position;
  const double distance = offset.norm();
  if (distance == 0.0) {
    throw std::invalid_argument("facing_reward: robot and ball coincide");
  }
  const Eigen::Vector2d heading{std::cos(body_yaw), std::sin(body_yaw)};
  return std::max(0.0, heading.dot(offset) / distance);
}

double shape_reward(double base, const Eigen::Vector2d& body_velocity,
                    const Eigen::Vector2d& v_ref, double feet_deviation,
                    double sigma_feet) {
  if (feet_deviation < 0.0) {
    throw std::invalid_argument("shape_reward: feet_deviation must be >= 0");
  }
  return std::exp(-feet_deviation / sigma_feet) *
         (base + std::exp(-(body_velocity - v_ref).norm()));
}

double base_total(const RewardBreakdown& parts, const RewardConfig& config) {
  return parts.task + config.proximity_weight * parts.proximity +
         config.facing_weight * parts.facing;
}

}  // namespace dribble
