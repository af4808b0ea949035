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

#include "dribble/perception.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Geometry>

#include "dribble/errors.hpp"

namespace dribble {

Eigen::Matrix3d rotation_from_rpy(double roll, double pitch, double yaw) {
  return (Eigen::AngleAxisd(yaw, Eigen::Vector3d::UnitZ()) *
          Eigen::AngleAxisd(pitch, Eigen::Vector3d::UnitY()) *
          Eigen::AngleAxisd(roll, Eigen::Vector3d::UnitX()))
      .toRotationMatrix();
}

CameraModel CameraModel::forward_facing() {
  CameraModel cam;
  cam.mount_position = {0.25, 0.0, 0.0};
  // Optical axis (0,0,1) pitched to 30 degrees below the body x axis.
  cam.mount_orientation = rotation_from_rpy(0.0, M_PI / 2.0 + M_PI / 6.0, 0.0);
  return cam;
}

CameraModel CameraModel::downward_facing() {
  CameraModel cam;
  cam.mount_position = {0.10, 0.0, -0.05};
  cam.mount_orientation = rotation_from_rpy(0.0, M_PI, 0.0);
  return cam;
}

double bbox_diameter(const BoundingBox& box) {
  const double w = box.x_max - box.x_min;
  const double h = box.y_max - box.y_min;
  if (!(w > 0.0) || !(h > 0.0)) {
    throw std::invalid_argument("bbox_diameter: degenerate box");
  }
  return std::sqrt(w * h);
}

Eigen::Vector2d bbox_center(const BoundingBox& box) {
  return {(box.x_min + box.x_max) / 2.0, (box.y_min + box.y_max) / 2.0};
}

double viewing_angle_distance(const BoundingBox& box, const CameraModel& cam,
                              double ball_diameter) {
  const double delta_theta = bbox_diameter(box) / cam.focal;
  if (delta_theta <= 0.0 || delta_theta >= M_PI) {
    throw GeometryError("viewing_angle_distance: subtended angle outside (0, pi)");
  }
  return ball_diameter / (2.0 * std::sin(delta_theta / 2.0));
}

Eigen::Vector3d pixel_to_ray(const Eigen::Vector2d& pixel,
                             const CameraModel& cam) {
  if (!pixel.allFinite()) {
    throw std::invalid_argument("pixel_to_ray: non-finite pixel");
  }
  const Eigen::Vector2d offset = pixel - cam.principal_point;
  const double radius = offset.norm();
  const double theta = radius / cam.focal;
  if (theta > cam.fov / 2.0) {
    throw OutOfViewError("pixel_to_ray: pixel beyond fov/2");
  }
  if (radius == 0.0) {
    return Eigen::Vector3d::UnitZ();
  }
  const Eigen::Vector2d dir = offset / radius;
  const double s = std::sin(theta);
  return {s * dir.x(), s * dir.y(), std::cos(theta)};
}

Eigen::Vector3d viewing_angle_position(const BoundingBox& box,
                                       const CameraModel& cam,
                                       double ball_diameter) {
  const double distance = viewing_angle_distance(box, cam, ball_diameter);
  const Eigen::Vector3d ray = pixel_to_ray(bbox_center(box), cam);
  return cam.mount_position + cam.mount_orientation * (distance * ray);
}

Eigen::Vector2d projection_intersection(const Eigen::Vector2d& pixel,
                                        const CameraModel& cam,
                                        double body_height,
                                        double ball_radius) {
  const Eigen::Vector3d ray_body =
      cam.mount_orientation * pixel_to_ray(pixel, cam);
  const Eigen::Vector3d origin =
      cam.mount_position + Eigen::Vector3d{0.0, 0.0, body_height};
  const double dz = ray_body.z();
  if (std::abs(dz) < 1e-12) {
    throw NoIntersectionError("projection_intersection: ray parallel to plane");
  }
  const double t = (ball_radius - origin.z()) / dz;
  if (t <= 0.0) {
    throw NoIntersectionError("projection_intersection: ray points away from plane");
  }
  return (origin + t * ray_body).head<2>();
}

std::optional<BoundingBox> synthetic_bbox(const Eigen::Vector3d& ball_center_body,
                                          const CameraModel& cam,
                                          double ball_diameter) {
  const Eigen::Vector3d in_cam =
      cam.mount_orientation.transpose() *
      (ball_center_body - cam.mount_position);
  const double distance = in_cam.norm();
  if (distance <= ball_diameter / 2.0) {
    throw GeometryError("synthetic_bbox: ball encloses the camera center");
  }
  const double theta = std::atan2(in_cam.head<2>().norm(), in_cam.z());
  if (theta > cam.fov / 2.0) {
    return std::nullopt;
  }
  const double azimuth = std::atan2(in_cam.y(), in_cam.x());
  const Eigen::Vector2d center =
      cam.principal_point +
      cam.focal * theta * Eigen::Vector2d{std::cos(azimuth), std::sin(azimuth)};
  // Half the subtended angle, in pixels, so that bbox_diameter inverts to the
  // exact distance under the viewing-angle model.
  const double half_extent =
      cam.focal * std::asin(ball_diameter / (2.0 * distance));
  BoundingBox box;
  box.x_min = center.x() - half_extent;
  box.x_max = center.x() + half_extent;
  box.y_min = center.y() - half_extent;
  box.y_max = center.y() + half_extent;
  box.confidence = 1.0;
  return box;
}

}  // namespace dribble
