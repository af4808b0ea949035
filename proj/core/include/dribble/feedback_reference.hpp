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

// PI + command feed-through gains of the body-velocity reference block.
struct FeedbackGains {
  double k_p = 0.5;    // on (ball_vel - robot_vel)
  double k_i = 4.0;    // 1/s, on the accumulated velocity difference
  double k_cmd = 1.0;  // on (ball_vel - command)
};

// Anti-windup bound on each axis of the integral accumulator, meters.
inline constexpr double kIntegralClamp = 0.5;

struct FeedbackState {
  Eigen::Vector2d integral{0.0, 0.0};  // m, accumulated (ball - robot) velocity
  FeedbackGains gains{};
};

// Forward-Euler accumulation of the velocity difference, clamped per axis.
FeedbackState accumulate(const FeedbackState& state,
                         const Eigen::Vector2d& ball_velocity,
                         const Eigen::Vector2d& robot_velocity, double dt);

// Reference body velocity in the world frame:
//   k_p*(ball - robot) + k_i*integral + k_cmd*(ball - command).
// With the robot at rest and zero command this deliberately exceeds the
// ball velocity by the factor k_p + k_cmd, so the reference always outruns
// the ball.
Eigen::Vector2d compute_reference(const FeedbackState& state,
                                  const Eigen::Vector2d& ball_velocity,
                                  const Eigen::Vector2d& robot_velocity,
                                  const Eigen::Vector2d& command);

}  // namespace dribble
