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

#include <optional>

#include <Eigen/Core>

#include "dribble/perception.hpp"

namespace dribble {

// Constant-velocity ball estimate: x = [px, py, vx, vy].
struct FilterState {
  Eigen::Vector4d x = Eigen::Vector4d::Zero();
  Eigen::Matrix4d P = 0.01 * Eigen::Matrix4d::Identity();
};

// Up to four position sources (two cameras x two geometric models) and one
// velocity source. Absent slots are skipped in the update; their H and R
// blocks are never formed.
struct MeasurementSet {
  std::optional<Eigen::Vector2d> pos_angle_cam1;
  std::optional<Eigen::Vector2d> pos_angle_cam2;
  std::optional<Eigen::Vector2d> pos_center_cam1;
  std::optional<Eigen::Vector2d> pos_center_cam2;
  std::optional<Eigen::Vector2d> vel_estimate;

  bool empty() const {
    return !pos_angle_cam1 && !pos_angle_cam2 && !pos_center_cam1 &&
           !pos_center_cam2 && !vel_estimate;
  }
};

inline constexpr int kNumMeasurementSlots = 5;

struct NoiseConfig {
  Eigen::Matrix4d Q;                   // process noise per step
  Eigen::Matrix<double, 10, 10> R;     // block-diagonal, 2x2 per slot

  NoiseConfig() {
    Q = Eigen::Vector4d(0.01, 0.01, 0.2, 0.2).asDiagonal();
    Eigen::Matrix<double, 10, 1> r;
    r << 0.01, 0.01, 0.01, 0.01, 0.01, 0.01, 0.01, 0.01, 0.1, 0.1;
    R = r.asDiagonal();
  }
};

// Initializes from whichever first detection has higher confidence, using
// the viewing-angle model: velocity zero, P = 0.01*I. Throws
// CannotInitializeError when both boxes are absent.
FilterState init_filter(const std::optional<BoundingBox>& box_cam1,
                        const std::optional<BoundingBox>& box_cam2,
                        const CameraModel& cam1, const CameraModel& cam2,
                        double ball_diameter = kDefaultBallDiameter);

// x' = F x, P' = F P F^T + Q with F rebuilt from the actual dt.
FilterState predict(const FilterState& state, double dt,
                    const NoiseConfig& noise);

// Masked measurement update in Joseph form. An empty set is a no-op.
FilterState update(const FilterState& state, const MeasurementSet& meas,
                   const NoiseConfig& noise);

// update(predict(state, dt), meas).
FilterState step(const FilterState& state, double dt,
                 const MeasurementSet& meas, const NoiseConfig& noise);

}  // namespace dribble
