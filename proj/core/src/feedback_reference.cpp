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

#include "dribble/feedback_reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dribble {

FeedbackState accumulate(const FeedbackState& state,
                         const Eigen::Vector2d& ball_velocity,
                         const Eigen::Vector2d& robot_velocity, double dt) {
  if (dt < 0.0) {
    throw std::invalid_argument("accumulate: dt must be >= 0");
  }
  if (!ball_velocity.allFinite() || !robot_velocity.allFinite()) {
    throw std::invalid_argument("accumulate: non-finite input");
  }
  FeedbackState next = state;
  const Eigen::Vector2d raw =
      state.integral + (ball_velocity - robot_velocity) * dt;
  next.integral = raw.cwiseMin(kIntegralClamp).cwiseMax(-kIntegralClamp);
  return next;
}

Eigen::Vector2d compute_reference(const FeedbackState& state,
                                  const Eigen::Vector2d& ball_velocity,
                                  const Eigen::Vector2d& robot_velocity,
                                  const Eigen::Vector2d& command) {
  if (!ball_velocity.allFinite() || !robot_velocity.allFinite() ||
      !command.allFinite() || !state.integral.allFinite()) {
    throw std::invalid_argument("compute_reference: non-finite input");
  }
  const FeedbackGains& g = state.gains;
  return g.k_p * (ball_velocity - robot_velocity) + g.k_i * state.integral +
         g.k_cmd * (ball_velocity - command);
}

}  // namespace dribble
