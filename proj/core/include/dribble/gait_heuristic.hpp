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

#include <Eigen/Core>

namespace dribble {

// A foot closer to the ball than this is excluded from the deviation sum.
inline constexpr double kNearBallThreshold = 0.10;  // m, strict

// Gait timing reference. phase wraps modulo 1 on advance.
struct GaitClock {
  double phase = 0.0;        // [0, 1)
  double period = 0.5;       // s
  double duty_factor = 0.5;  // (0, 1), stance fraction
};

// Nominal hip geometry; the four hips sit at (+-hip_offset_x, +-hip_offset_y)
// in the body frame. Defaults approximate a mid-size quadruped.
struct GaitParams {
  double hip_offset_x = 0.19;  // m
  double hip_offset_y = 0.12;  // m
  double period = 0.5;         // s
  double duty_factor = 0.5;
};

// Planar robot state. Feet are indexed front-left, front-right, rear-left,
// rear-right. Foot velocities are world-frame finite differences kept by
// the simulator for the contact model.
struct RobotState {
  Eigen::Vector2d body_position{0.0, 0.0};
  double body_yaw = 0.0;  // rad, normalized to (-pi, pi]
  Eigen::Vector2d body_velocity{0.0, 0.0};
  std::array<Eigen::Vector2d, 4> foot_positions{
      Eigen::Vector2d{0.19, 0.12}, Eigen::Vector2d{0.19, -0.12},
      Eigen::Vector2d{-0.19, 0.12}, Eigen::Vector2d{-0.19, -0.12}};
  std::array<Eigen::Vector2d, 4> foot_velocities{
      Eigen::Vector2d{0.0, 0.0}, Eigen::Vector2d{0.0, 0.0},
      Eigen::Vector2d{0.0, 0.0}, Eigen::Vector2d{0.0, 0.0}};
  GaitClock clock{};
};

// Hip position of the given foot in the body frame.
Eigen::Vector2d hip_offset(const GaitParams& params, int foot_index);

// Touchdown target: hip projected through the body pose, led by
// v_ref * stance_duration / 2 with stance_duration = period * duty_factor.
Eigen::Vector2d raibert_target(const RobotState& robot,
                               const Eigen::Vector2d& v_ref, int foot_index,
                               const GaitParams& params = {});

// True iff the foot is strictly closer than kNearBallThreshold to the ball.
bool near_indicator(const Eigen::Vector2d& ball_position,
                    const Eigen::Vector2d& foot_position);

// Sum over feet of (1 - near) * |foot - raibert_target|.
double feet_deviation(const RobotState& robot, const Eigen::Vector2d& v_ref,
                      const Eigen::Vector2d& ball_position,
                      const GaitParams& params = {});

// Wraps an angle to (-pi, pi].
double wrap_angle(double angle);

}  // namespace dribble
