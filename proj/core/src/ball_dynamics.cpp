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

#include "dribble/ball_dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace dribble {

namespace {
constexpr double kDragEpsilon = 1e-9;
}

const char* to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::Stable:
      return "Stable";
    case StabilityClass::Marginal:
      return "Marginal";
    case StabilityClass::Unstable:
      return "Unstable";
  }
  return "?";
}

Eigen::Vector2d drag_accel(const Eigen::Vector2d& velocity, double drag_coefficient) {
  if (!velocity.allFinite() || !std::isfinite(drag_coefficient)) {
    throw std::invalid_argument("drag_accel: non-finite input");
  }
  return -drag_coefficient * velocity;
}

BallState step(const BallState& state, double drag_coefficient, double dt) {
  if (dt < 0.0) {
    throw std::invalid_argument("ball step: dt must be >= 0");
  }
  if (!state.position.allFinite() || !state.velocity.allFinite() ||
      !std::isfinite(drag_coefficient)) {
    throw std::invalid_argument("ball step: non-finite input");
  }
  const double decay = std::exp(-drag_coefficient * dt);
  // (1 - e^{-c dt})/c is 0/0 at c = 0; below kDragEpsilon the limit v*dt is
  // numerically safer than the quotient.
  const double displacement_factor =
      std::abs(drag_coefficient) < kDragEpsilon
          ? dt
          : (1.0 - decay) / drag_coefficient;
  BallState next;
  next.position = state.position + state.velocity * displacement_factor;
  next.velocity = state.velocity * decay;
  return next;
}

StabilityClass classify_stability(double drag_coefficient) {
  if (!std::isfinite(drag_coefficient)) {
    throw std::invalid_argument("classify_stability: non-finite input");
  }
  if (drag_coefficient > 0.0) return StabilityClass::Stable;
  if (drag_coefficient < 0.0) return StabilityClass::Unstable;
  return StabilityClass::Marginal;
}

}  // namespace dribble
