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

#include "dribble/scenario.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dribble/errors.hpp"

namespace dribble {

using json = nlohmann::ordered_json;

namespace {

std::string join_key(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void require_known_keys(const json& obj, const std::string& prefix,
                        const std::set<std::string>& known) {
  for (const auto& item : obj.items()) {
    if (!known.count(item.key())) {
      throw ConfigError(join_key(prefix, item.key()), "unknown key");
    }
  }
}

double as_number(const json& value, const std::string& key) {
  if (!value.is_number()) {
    throw ConfigError(key, "expected a number");
  }
  const double x = value.get<double>();
  if (!std::isfinite(x)) {
    throw ConfigError(key, "must be finite");
  }
  return x;
}

void read_number(const json& obj, const std::string& prefix,
                 const std::string& key, double* out) {
  if (!obj.contains(key)) return;
  *out = as_number(obj.at(key), join_key(prefix, key));
}

void read_bool(const json& obj, const std::string& prefix,
               const std::string& key, bool* out) {
  if (!obj.contains(key)) return;
  const json& value = obj.at(key);
  if (!value.is_boolean()) {
    throw ConfigError(join_key(prefix, key), "expected true or false");
  }
  *out = value.get<bool>();
}

Eigen::Vector2d as_vec2(const json& value, const std::string& key) {
  if (!value.is_array() || value.size() != 2) {
    throw ConfigError(key, "expected an array of 2 numbers");
  }
  return {as_number(value[0], key), as_number(value[1], key)};
}

void read_vec2(const json& obj, const std::string& prefix,
               const std::string& key, Eigen::Vector2d* out) {
  if (!obj.contains(key)) return;
  *out = as_vec2(obj.at(key), join_key(prefix, key));
}

Eigen::Vector3d as_vec3(const json& value, const std::string& key) {
  if (!value.is_array() || value.size() != 3) {
    throw ConfigError(key, "expected an array of 3 numbers");
  }
  return {as_number(value[0], key), as_number(value[1], key),
          as_number(value[2], key)};
}

Range as_range(const json& value, const std::string& key) {
  const Eigen::Vector2d v = as_vec2(value, key);
  if (v.y() < v.x()) {
    throw ConfigError(key, "range upper bound is below the lower bound");
  }
  return Range{v.x(), v.y()};
}

void read_range(const json& obj, const std::string& prefix,
                const std::string& key, Range* out) {
  if (!obj.contains(key)) return;
  *out = as_range(obj.at(key), join_key(prefix, key));
}

void parse_camera(const json& obj, const std::string& prefix, CameraModel* cam) {
  require_known_keys(obj, prefix,
                     {"focal", "principal_point", "fov", "mount_position",
                      "mount_rpy"});
  read_number(obj, prefix, "focal", &cam->focal);
  read_vec2(obj, prefix, "principal_point", &cam->principal_point);
  read_number(obj, prefix, "fov", &cam->fov);
  if (obj.contains("mount_position")) {
    cam->mount_position =
        as_vec3(obj.at("mount_position"), join_key(prefix, "mount_position"));
  }
  if (obj.contains("mount_rpy")) {
    const Eigen::Vector3d rpy =
        as_vec3(obj.at("mount_rpy"), join_key(prefix, "mount_rpy"));
    cam->mount_orientation = rotation_from_rpy(rpy.x(), rpy.y(), rpy.z());
  }
}

}  // namespace

const char* to_string(ControllerKind kind) {
  return kind == ControllerKind::FeedbackGuided ? "feedback" : "naive";
}

const char* to_string(PerceptionMode mode) {
  return mode == PerceptionMode::GroundTruth ? "ground_truth"
                                             : "synthetic_cameras";
}

void validate(const ScenarioConfig& config) {
  if (!(config.dt > 0.0)) {
    throw ConfigError("dt", "must be > 0");
  }
  if (!(config.duration >= config.dt)) {
    throw ConfigError("duration", "must be >= dt");
  }
  if (!(config.terrain.ball_mass > 0.0)) {
    throw ConfigError("terrain.ball_mass", "must be > 0");
  }
  if (!std::isfinite(config.terrain.drag_coefficient)) {
    throw ConfigError("terrain.drag_coefficient", "must be finite");
  }
  double prev = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < config.command_script.size(); ++i) {
    const double t = config.command_script[i].start_time;
    if (t < prev) {
      throw ConfigError("command_script[" + std::to_string(i) + "].t",
                        "times must be non-decreasing");
    }
    prev = t;
  }
  for (int i = 0; i < 2; ++i) {
    const std::string prefix = "cameras[" + std::to_string(i) + "]";
    const CameraModel& cam = config.cameras[i];
    if (!(cam.focal > 0.0)) {
      throw ConfigError(prefix + ".focal", "must be > 0");
    }
    if (!(cam.fov > 0.0) || !(cam.fov < 2.0 * M_PI)) {
      throw ConfigError(prefix + ".fov", "must be in (0, 2*pi)");
    }
  }
  if (!(config.gait.period > 0.0)) {
    throw ConfigError("gait.period", "must be > 0");
  }
  if (!(config.gait.duty_factor > 0.0) || !(config.gait.duty_factor < 1.0)) {
    throw ConfigError("gait.duty_factor", "must be in (0, 1)");
  }
  if (config.perception.arrival_rate < 0.0 ||
      config.perception.arrival_rate > 1.0) {
    throw ConfigError("perception.arrival_rate", "must be in [0, 1]");
  }
  if (!(config.ball_diameter > 0.0)) {
    throw ConfigError("ball_diameter", "must be > 0");
  }
  if (!(config.body_height > 0.0)) {
    throw ConfigError("body_height", "must be > 0");
  }
  if (config.random_commands && !(config.random_commands->interval > 0.0)) {
    throw ConfigError("random_commands.interval", "must be > 0");
  }
}

ScenarioConfig parse_scenario_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ConfigError("<root>", std::string("not valid JSON: ") + err.what());
  }
  if (!root.is_object()) {
    throw ConfigError("<root>", "top level must be a JSON object");
  }

  require_known_keys(
      root, "",
      {"terrain", "controller", "command_script", "random_commands",
       "duration", "dt", "seed", "perception_mode", "randomize",
       "events_enabled", "randomization", "gains", "gait", "reward", "filter",
       "cameras", "perception", "initial", "body_height", "ball_diameter"});

  ScenarioConfig config;

  if (root.contains("terrain")) {
    const json& obj = root.at("terrain");
    require_known_keys(obj, "terrain", {"drag_coefficient", "ball_mass"});
    read_number(obj, "terrain", "drag_coefficient",
                &config.terrain.drag_coefficient);
    read_number(obj, "terrain", "ball_mass", &config.terrain.ball_mass);
  }

  if (root.contains("controller")) {
    const std::string name = root.at("controller").is_string()
                                 ? root.at("controller").get<std::string>()
                                 : "";
    if (name == "feedback") {
      config.controller = ControllerKind::FeedbackGuided;
    } else if (name == "naive") {
      config.controller = ControllerKind::NaivePursuit;
    } else {
      throw ConfigError("controller", "expected \"feedback\" or \"naive\"");
    }
  }

  if (root.contains("command_script")) {
    const json& arr = root.at("command_script");
    if (!arr.is_array()) {
      throw ConfigError("command_script", "expected an array");
    }
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string prefix = "command_script[" + std::to_string(i) + "]";
      const json& entry = arr[i];
      if (!entry.is_object()) {
        throw ConfigError(prefix, "expected an object {t, cmd}");
      }
      require_known_keys(entry, prefix, {"t", "cmd"});
      CommandKeyframe frame;
      if (!entry.contains("t") || !entry.contains("cmd")) {
        throw ConfigError(prefix, "needs both t and cmd");
      }
      frame.start_time = as_number(entry.at("t"), prefix + ".t");
      frame.command = as_vec2(entry.at("cmd"), prefix + ".cmd");
      config.command_script.push_back(frame);
    }
  }

  if (root.contains("random_commands")) {
    const json& obj = root.at("random_commands");
    require_known_keys(obj, "random_commands", {"interval", "range"});
    RandomCommandConfig rc;
    read_number(obj, "random_commands", "interval", &rc.interval);
    read_range(obj, "random_commands", "range", &rc.range);
    config.random_commands = rc;
  }

  read_number(root, "", "duration", &config.duration);
  read_number(root, "", "dt", &config.dt);
  if (root.contains("seed")) {
    const json& value = root.at("seed");
    if (!value.is_number_integer() && !value.is_number_unsigned()) {
      throw ConfigError("seed", "expected an integer");
    }
    config.seed = value.get<std::uint64_t>();
  }

  if (root.contains("perception_mode")) {
    const std::string name =
        root.at("perception_mode").is_string()
            ? root.at("perception_mode").get<std::string>()
            : "";
    if (name == "ground_truth") {
      config.perception_mode = PerceptionMode::GroundTruth;
    } else if (name == "synthetic_cameras") {
      config.perception_mode = PerceptionMode::SyntheticCameras;
    } else {
      throw ConfigError("perception_mode",
                        "expected \"ground_truth\" or \"synthetic_cameras\"");
    }
  }

  read_bool(root, "", "randomize", &config.randomize);
  read_bool(root, "", "events_enabled", &config.events_enabled);

  if (root.contains("randomization")) {
    const json& obj = root.at("randomization");
    require_known_keys(obj, "randomization",
                       {"drag", "ball_mass", "teleport_distance",
                        "perturbation_velocity", "camera_arrival_rate",
                        "command"});
    read_range(obj, "randomization", "drag", &config.randomization.drag);
    read_range(obj, "randomization", "ball_mass",
               &config.randomization.ball_mass);
    read_range(obj, "randomization", "teleport_distance",
               &config.randomization.teleport_distance);
    read_range(obj, "randomization", "perturbation_velocity",
               &config.randomization.perturbation_velocity);
    read_range(obj, "randomization", "camera_arrival_rate",
               &config.randomization.camera_arrival_rate);
    read_range(obj, "randomization", "command", &config.randomization.command);
  }

  if (root.contains("gains")) {
    const json& obj = root.at("gains");
    require_known_keys(obj, "gains", {"k_p", "k_i", "k_cmd"});
    read_number(obj, "gains", "k_p", &config.gains.k_p);
    read_number(obj, "gains", "k_i", &config.gains.k_i);
    read_number(obj, "gains", "k_cmd", &config.gains.k_cmd);
  }

  if (root.contains("gait")) {
    const json& obj = root.at("gait");
    require_known_keys(
        obj, "gait",
        {"hip_offset_x", "hip_offset_y", "period", "duty_factor"});
    read_number(obj, "gait", "hip_offset_x", &config.gait.hip_offset_x);
    read_number(obj, "gait", "hip_offset_y", &config.gait.hip_offset_y);
    read_number(obj, "gait", "period", &config.gait.period);
    read_number(obj, "gait", "duty_factor", &config.gait.duty_factor);
  }

  if (root.contains("reward")) {
    const json& obj = root.at("reward");
    require_known_keys(obj, "reward",
                       {"sigma_task", "sigma_proximity", "sigma_feet",
                        "proximity_weight", "facing_weight"});
    read_number(obj, "reward", "sigma_task", &config.reward.sigma_task);
    read_number(obj, "reward", "sigma_proximity",
                &config.reward.sigma_proximity);
    read_number(obj, "reward", "sigma_feet", &config.reward.sigma_feet);
    read_number(obj, "reward", "proximity_weight",
                &config.reward.proximity_weight);
    read_number(obj, "reward", "facing_weight", &config.reward.facing_weight);
  }

  if (root.contains("filter")) {
    const json& obj = root.at("filter");
    require_known_keys(obj, "filter", {"q_diag", "r_diag"});
    if (obj.contains("q_diag")) {
      const json& arr = obj.at("q_diag");
      if (!arr.is_array() || arr.size() != 4) {
        throw ConfigError("filter.q_diag", "expected an array of 4 numbers");
      }
      Eigen::Vector4d q;
      for (int i = 0; i < 4; ++i) q(i) = as_number(arr[i], "filter.q_diag");
      config.noise.Q = q.asDiagonal();
    }
    if (obj.contains("r_diag")) {
      const json& arr = obj.at("r_diag");
      if (!arr.is_array() || arr.size() != 10) {
        throw ConfigError("filter.r_diag", "expected an array of 10 numbers");
      }
      Eigen::Matrix<double, 10, 1> r;
      for (int i = 0; i < 10; ++i) r(i) = as_number(arr[i], "filter.r_diag");
      config.noise.R = r.asDiagonal();
    }
  }

  if (root.contains("cameras")) {
    const json& arr = root.at("cameras");
    if (!arr.is_array() || arr.size() != 2) {
      throw ConfigError("cameras", "expected an array of 2 camera objects");
    }
    for (int i = 0; i < 2; ++i) {
      const std::string prefix = "cameras[" + std::to_string(i) + "]";
      if (!arr[i].is_object()) {
        throw ConfigError(prefix, "expected an object");
      }
      parse_camera(arr[i], prefix, &config.cameras[i]);
    }
  }

  if (root.contains("perception")) {
    const json& obj = root.at("perception");
    require_known_keys(obj, "perception",
                       {"pixel_noise_std", "velocity_noise_std",
                        "arrival_rate"});
    read_number(obj, "perception", "pixel_noise_std",
                &config.perception.pixel_noise_std);
    read_number(obj, "perception", "velocity_noise_std",
                &config.perception.velocity_noise_std);
    read_number(obj, "perception", "arrival_rate",
                &config.perception.arrival_rate);
  }

  if (root.contains("initial")) {
    const json& obj = root.at("initial");
    require_known_keys(obj, "initial",
                       {"ball_offset", "ball_velocity", "jitter_radius"});
    read_vec2(obj, "initial", "ball_offset", &config.initial.ball_offset);
    read_vec2(obj, "initial", "ball_velocity", &config.initial.ball_velocity);
    read_number(obj, "initial", "jitter_radius",
                &config.initial.jitter_radius);
  }

  read_number(root, "", "body_height", &config.body_height);
  read_number(root, "", "ball_diameter", &config.ball_diameter);

  validate(config);
  return config;
}

ScenarioConfig load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(path.string(), "cannot open scenario file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_json(buffer.str());
}

std::string scenario_to_json(const ScenarioConfig& config) {
  json root;
  root["terrain"] = {{"drag_coefficient", config.terrain.drag_coefficient},
                     {"ball_mass", config.terrain.ball_mass}};
  root["controller"] = to_string(config.controller);
  root["command_script"] = json::array();
  for (const CommandKeyframe& frame : config.command_script) {
    root["command_script"].push_back(
        {{"t", frame.start_time},
         {"cmd", {frame.command.x(), frame.command.y()}}});
  }
  if (config.random_commands) {
    root["random_commands"] = {
        {"interval", config.random_commands->interval},
        {"range",
         {config.random_commands->range.lo, config.random_commands->range.hi}}};
  }
  root["duration"] = config.duration;
  root["dt"] = config.dt;
  root["seed"] = config.seed;
  root["perception_mode"] = to_string(config.perception_mode);
  root["randomize"] = config.randomize;
  root["events_enabled"] = config.events_enabled;
  root["gains"] = {{"k_p", config.gains.k_p},
                   {"k_i", config.gains.k_i},
                   {"k_cmd", config.gains.k_cmd}};
  root["gait"] = {{"hip_offset_x", config.gait.hip_offset_x},
                  {"hip_offset_y", config.gait.hip_offset_y},
                  {"period", config.gait.period},
                  {"duty_factor", config.gait.duty_factor}};
  root["body_height"] = config.body_height;
  root["ball_diameter"] = config.ball_diameter;
  return root.dump(2);
}

}  // namespace dribble
