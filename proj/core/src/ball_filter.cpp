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

#include "dribble/ball_filter.hpp"

#include <array>
#include <stdexcept>

#include <Eigen/Dense>

#include "dribble/errors.hpp"

namespace dribble {

namespace {

Eigen::Matrix4d transition_matrix(double dt) {
  Eigen::Matrix4d f = Eigen::Matrix4d::Identity();
  f(0, 2) = dt;
  f(1, 3) = dt;
  return f;
}

struct Slot {
  const std::optional<Eigen::Vector2d>* value;
  int state_offset;  // 0 = position block, 2 = velocity block
  int noise_offset;  // row in the 10x10 R
};

}  // namespace

FilterState init_filter(const std::optional<BoundingBox>& box_cam1,
                        const std::optional<BoundingBox>& box_cam2,
                        const CameraModel& cam1, const CameraModel& cam2,
                        double ball_diameter) {
  const BoundingBox* box = nullptr;
  const CameraModel* cam = nullptr;
  if (box_cam1) {
    box = &*box_cam1;
    cam = &cam1;
  }
  if (box_cam2 && (!box || box_cam2->confidence > box->confidence)) {
    box = &*box_cam2;
    cam = &cam2;
  }
  if (!box) {
    throw CannotInitializeError("init_filter: no detection in either camera");
  }
  FilterState state;
  state.x.head<2>() = viewing_angle_position(*box, *cam, ball_diameter).head<2>();
  state.x.tail<2>().setZero();
  state.P = 0.01 * Eigen::Matrix4d::Identity();
  return state;
}

FilterState predict(const FilterState& state, double dt,
                    const NoiseConfig& noise) {
  if (dt < 0.0) {
    throw std::invalid_argument("predict: dt must be >= 0");
  }
  const Eigen::Matrix4d f = transition_matrix(dt);
  FilterState next;
  next.x = f * state.x;
  next.P = f * state.P * f.transpose() + noise.Q;
  next.P = 0.5 * (next.P + next.P.transpose());
  return next;
}

FilterState update(const FilterState& state, const MeasurementSet& meas,
                   const NoiseConfig& noise) {
  if (meas.empty()) {
    return state;
  }
  const std::array<Slot, kNumMeasurementSlots> slots{{
      {&meas.pos_angle_cam1, 0, 0},
      {&meas.pos_angle_cam2, 0, 2},
      {&meas.pos_center_cam1, 0, 4},
      {&meas.pos_center_cam2, 0, 6},
      {&meas.vel_estimate, 2, 8},
  }};

  int rows = 0;
  for (const Slot& slot : slots) {
    if (slot.value->has_value()) rows += 2;
  }

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(rows, 4);
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(rows, rows);
  Eigen::VectorXd m(rows);
  int row = 0;
  for (const Slot& slot : slots) {
    if (!slot.value->has_value()) continue;
    h.block<2, 2>(row, slot.state_offset) = Eigen::Matrix2d::Identity();
    r.block<2, 2>(row, row) =
        noise.R.block<2, 2>(slot.noise_offset, slot.noise_offset);
    m.segment<2>(row) = **slot.value;
    row += 2;
  }

  const Eigen::MatrixXd s = h * state.P * h.transpose() + r;
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      s, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-12 * sv(0)) {
    throw FilterDegenerateError("update: innovation covariance is singular");
  }
  const Eigen::MatrixXd gain = svd.solve(h * state.P).transpose();

  FilterState next;
  next.x = state.x + gain * (m - h * state.x);
  // Joseph form keeps P symmetric PSD under any masking pattern.
  const Eigen::Matrix4d a = Eigen::Matrix4d::Identity() - gain * h;
  next.P = a * state.P * a.transpose() + gain * r * gain.transpose();
  next.P = 0.5 * (next.P + next.P.transpose());
  return next;
}

FilterState step(const FilterState& state, double dt,
                 const MeasurementSet& meas, const NoiseConfig& noise) {
  return update(predict(state, dt, noise), meas, noise);
}

}  // namespace dribble
