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

// Planar ball state in the world frame.
struct BallState {
  Eigen::Vector2d position{0.0, 0.0};  // m
  Eigen::Vector2d velocity{0.0, 0.0};  // m/s
};

// Ball-terrain interaction parameters. drag_coefficient is the single
// scalar C summarizing rolling resistance: positive terrain stops the
// ball, zero lets it coast, negative (downhill proxy) accelerates it.
struct TerrainParams {
  double drag_coefficient = 0.2;  // 1/s
  double ball_mass = 0.3;         // kg
};

enum class StabilityClass { Stable, Marginal, Unstable };

const char* to_string(StabilityClass c);

// Rolling drag acceleration: a = -c_d * v.
Eigen::Vector2d drag_accel(const Eigen::Vector2d& velocity, double drag_coefficient);

// Advances the free-rolling ball by dt using the exact flow of the linear
// drag system: v' = v*exp(-c*dt), p' = p + v*(1 - exp(-c*dt))/c, with the
// c -> 0 limit p' = p + v*dt taken when |c| < 1e-9.
BallState step(const BallState& state, double drag_coefficient, double dt);

// Sign of the nonzero system eigenvalue -c_d decides the class.
StabilityClass classify_stability(double drag_coefficient);

}  // namespace dribble
