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

namespace dribble {

inline constexpr double kDefaultBallDiameter = 0.18;  // m
inline constexpr double kDefaultBallRadius = 0.09;    // m

// Ideal equidistant fisheye camera, r = focal * theta.
//
// Camera frame: z along the optical axis, x along image u, y along image v.
// mount_orientation rotates camera-frame vectors into the body frame;
// mount_position is the camera center in the body frame (origin at the body
// center, z up). Roll/pitch sway of the trunk is ignored throughout.
struct CameraModel {
  double focal = 200.0;  // px/rad
  Eigen::Vector2d principal_point{400.0, 400.0};
  Eigen::Vector3d mount_position{0.0, 0.0, 0.0};
  Eigen::Matrix3d mount_orientation = Eigen::Matrix3d::Identity();
  double fov = 210.0 * M_PI / 180.0;  // rad, full cone

  // Forward camera, optical axis pitched 30 degrees below the horizon.
  static CameraModel forward_facing();
  // Belly camera, optical axis straight down.
  static CameraModel downward_facing();
};

// Rz(yaw)*Ry(pitch)*Rx(roll), mapping camera frame to body frame.
Eigen::Matrix3d rotation_from_rpy(double roll, double pitch, double yaw);

struct BoundingBox {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;
  double confidence = 1.0;
};

// Geometric mean of the box edges, px. Degenerate boxes are rejected.
double bbox_diameter(const BoundingBox& box);

Eigen::Vector2d bbox_center(const BoundingBox& box);

// Viewing-angle model: the box subtends delta_theta = diameter/focal, so the
// ball center is at distance ball_diameter / (2 sin(delta_theta/2)).
double viewing_angle_distance(const BoundingBox& box, const CameraModel& cam,
                              double ball_diameter = kDefaultBallDiameter);

// Unit ray in the camera frame for a pixel; polar angle |px - pp|/focal off
// the optical axis. Throws OutOfViewError past fov/2.
Eigen::Vector3d pixel_to_ray(const Eigen::Vector2d& pixel,
                             const CameraModel& cam);

// Full viewing-angle reconstruction: distance * ray, mapped into the body
// frame.
Eigen::Vector3d viewing_angle_position(const BoundingBox& box,
                                       const CameraModel& cam,
                                       double ball_diameter = kDefaultBallDiameter);

// Projection-intersection model: intersects the pixel ray with the
// horizontal plane z = ball_radius, in the body-ground frame (body frame
// translated down so z = 0 is the ground; body center sits at body_height).
// Returns the horizontal coordinates of the hit point.
Eigen::Vector2d projection_intersection(const Eigen::Vector2d& pixel,
                                        const CameraModel& cam,
                                        double body_height,
                                        double ball_radius = kDefaultBallRadius);

// Forward model: projects a ball center (body frame) through the equidistant
// model and returns a square box whose diameter inverts exactly under
// viewing_angle_distance. Returns nullopt when the center is outside fov.
std::optional<BoundingBox> synthetic_bbox(const Eigen::Vector3d& ball_center_body,
                                          const CameraModel& cam,
                                          double ball_diameter = kDefaultBallDiameter);

}  // namespace dribble
