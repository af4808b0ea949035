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

#include "dribble/gait_heuristic.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Geometry>

namespace dribble {

double wrap_angle(double angle) {
  double a = std::fmod(angle + M_PI, 2.0 * M_PI);
  if (a <= 0.0) a += 2.0 * M_PI;
  return a - M_PI;
}

Eigen::Vector2d hip_offset(const GaitParams& params, int foot_index) {
  switch (foot_index) {
    case 0:
      return {params.hip_offset_x, params.hip_offset_y};
    case 1:
      return {params.hip_offset_x, -params.hip_offset_y};
    case 2:
      return {-params.hip_offset_x, params.hip_offset_y};
    case 3:
      return {-params.hip_offset_x, -params.hip_offset_y};
    default:
      throw std::invalid_argument("hip_offset: foot_index must be in 0..3");
  }
}

Eigen::Vector2d raibert_target(const RobotState& robot,
                               const Eigen::Vector2d& v_ref, int foot_index,
                               const GaitParams& params) {
  if (foot_index < 0 || foot_index > 3) {
    throw std::invalid_argument("raibert_target: foot_index must be in 0..3");
  }
  const Eigen::Vector2d hip = hip_offset(params, foot_index);
  const Eigen::Rotation2Dd yaw(robot.body_yaw);
  const double stance_duration = robot.clock.period * robot.clock.duty_factor;
  return robot.body_position + yaw * hip + v_ref * (stance_duration / 2.0);
}

bool near_indicator(const Eigen::Vector2d& ball_position,
                    const Eigen::Vector2d& foot_position) {
  if (!ball_position.allFinite() || !foot_position.allFinite()) {
    throw std::invalid_argument("near_indicator: non-finite input");
  }
  return (ball_position - foot_position).norm() < kNearBallThreshold;
}

double feet_deviation(const RobotState& robot, const Eigen::Vector2d& v_ref,
                      const Eigen::Vector2d& ball_position,
                      const GaitParams& params) {
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (near_indicator(ball_position, robot.foot_positions[i])) continue;
    sum += (robot.foot_positions[i] - raibert_target(robot, v_ref, i, params))
               .norm();
  }
  return sum;
}

}  // namespace dribble
