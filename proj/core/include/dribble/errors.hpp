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

#include <stdexcept>
#include <string>

namespace dribble {

// Invalid inputs (non-finite values, negative dt, bad indices) raise
// std::invalid_argument directly. The types below cover runtime failures
// that are not precondition violations.

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested pixel/ray lies outside the camera field of view.
struct OutOfViewError : GeometryError {
  using GeometryError::GeometryError;
};

// Ray does not hit the requested ground plane.
struct NoIntersectionError : GeometryError {
  using GeometryError::GeometryError;
};

// Filter cannot be initialized (no detection in either camera).
struct CannotInitializeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Innovation covariance is numerically singular.
struct FilterDegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Closed-loop state became non-finite; carries the step where it happened.
struct SimulationDivergedError : std::runtime_error {
  SimulationDivergedError(const std::string& what, int step_index)
      : std::runtime_error(what), step(step_index) {}
  int step;
};

// Scenario file problem; carries the offending key path.
struct ConfigError : std::runtime_error {
  ConfigError(const std::string& key_path, const std::string& what)
      : std::runtime_error("config key '" + key_path + "': " + what),
        key(key_path) {}
  std::string key;
};

}  // namespace dribble
