// Copyright 2026 The traopt authors
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
//
// Planar point navigation among random circular obstacles, with optional
// physical barrier walls. Dynamics are a velocity-controlled single
// integrator with a speed clamp; circular obstacles act through a hinge
// penalty on the safety distance, barrier walls additionally block motion
// (axis-separated collision resolution, so the point slides along walls).

#pragma once

#include <cstdint>
#include <vector>

#include "traopt/env.hpp"

namespace traopt {

enum class BarrierKind { kNone, kSquare, kWall };

BarrierKind barrier_from_string(const std::string& name);
std::string to_string(BarrierKind kind);

struct Nav2DConfig {
  double workspace{10.0};  // square side, meters
  int n_obstacles{25};
  double obstacle_radius_min{0.2};
  double obstacle_radius_max{0.6};
  Eigen::Vector2d start{1.0, 1.0};
  Eigen::Vector2d goal{9.0, 9.0};
  double dt{0.1};
  double v_max{5.0};

  double w_task{1.0};
  double w_obstacle{10.0};
  double w_control{0.01};
  double r_safe{0.3};

  BarrierKind barrier{BarrierKind::kNone};
  double barrier_size{2.4};       // square barrier side length, centered on start
  double barrier_thickness{0.2};  // wall thickness
  double barrier_gap{0.6};        // opening width
  int barrier_gap_side{0};        // square barrier: 0 = +x, 1 = +y, 2 = -x, 3 = -y
  double wall_x{5.0};             // wall barrier: x position of the wall
  double wall_gap_pos{5.0};       // wall barrier: y center of the opening

  std::uint64_t seed{0};

  void validate() const;
};

struct Circle {
  Eigen::Vector2d center;
  double radius;
};

/// Axis-aligned rectangle, used for barrier walls.
struct Rect {
  Eigen::Vector2d center;
  Eigen::Vector2d half;  // half extents

  /// Signed distance: negative inside.
  double signed_distance(const Eigen::Vector2d& p) const;
  bool contains(const Eigen::Vector2d& p) const;
};

class Nav2DEnv final : public Environment {
 public:
  /// Builds the world: obstacle placement is a deterministic function of
  /// config.seed, with rejection so that neither start nor goal lies within
  /// the safety distance of any obstacle. Throws std::invalid_argument if a
  /// feasible placement is not found within 100 tries per obstacle.
  explicit Nav2DEnv(const Nav2DConfig& config);

  std::string name() const override { return "nav2d"; }
  int state_dim() const override { return 2; }
  int control_dim() const override { return 2; }
  double dt() const override { return config_.dt; }

  EnvState reset(std::uint64_t seed) const override;
  StepOutcome step(const EnvState& state, const Vector& control) const override;

  /// Observation: (x, y, goal_x, goal_y).
  Vector observe(const EnvState& state) const override;
  bool success(const EnvState& state, double tolerance) const override;

  const Nav2DConfig& config() const { return config_; }
  const std::vector<Circle>& obstacles() const { return obstacles_; }
  const std::vector<Rect>& walls() const { return walls_; }

  /// Obstacle stage-cost term at a position (hinge on safety distance,
  /// squared, over circles and walls).
  double obstacle_term(const Eigen::Vector2d& p) const;

 private:
  Nav2DConfig config_;
  std::vector<Circle> obstacles_;
  std::vector<Rect> walls_;
};

}  // namespace traopt
