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

#include "traopt/nav2d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "traopt/rng.hpp"

namespace traopt {
namespace {

constexpr double kContactEps = 1e-9;

double hinge(double z) { return z > 0.0 ? z : 0.0; }

}  // namespace

BarrierKind barrier_from_string(const std::string& name) {
  if (name == "none") return BarrierKind::kNone;
  if (name == "square") return BarrierKind::kSquare;
  if (name == "wall") return BarrierKind::kWall;
  throw std::invalid_argument("unknown barrier kind '" + name +
                              "' (use none, square or wall)");
}

std::string to_string(BarrierKind kind) {
  switch (kind) {
    case BarrierKind::kNone: return "none";
    case BarrierKind::kSquare: return "square";
    case BarrierKind::kWall: return "wall";
  }
  return "?";
}

void Nav2DConfig::validate() const {
  if (!(workspace > 0.0)) throw std::invalid_argument("env.workspace must be > 0");
  if (n_obstacles < 0) throw std::invalid_argument("env.n_obstacles must be >= 0");
  if (!(obstacle_radius_min > 0.0 && obstacle_radius_max >= obstacle_radius_min)) {
    throw std::invalid_argument("env obstacle radius range is invalid");
  }
  if (!(dt > 0.0)) throw std::invalid_argument("env.dt must be > 0");
  if (!(v_max > 0.0)) throw std::invalid_argument("env.v_max must be > 0");
  if (!(r_safe >= 0.0)) throw std::invalid_argument("env.r_safe must be >= 0");
  if (barrier != BarrierKind::kNone && !(barrier_gap > 0.0)) {
    throw std::invalid_argument("env.barrier_gap must be > 0 when a barrier is enabled");
  }
  if (barrier == BarrierKind::kSquare && !(barrier_size > barrier_gap)) {
    throw std::invalid_argument("env.barrier_size must exceed env.barrier_gap");
  }
}

double Rect::signed_distance(const Eigen::Vector2d& p) const {
  const double dx = std::abs(p.x() - center.x()) - half.x();
  const double dy = std::abs(p.y() - center.y()) - half.y();
  const double outside = std::hypot(hinge(dx), hinge(dy));
  const double inside = std::min(std::max(dx, dy), 0.0);
  return outside + inside;
}

bool Rect::contains(const Eigen::Vector2d& p) const {
  return std::abs(p.x() - center.x()) < half.x() &&
         std::abs(p.y() - center.y()) < half.y();
}

Nav2DEnv::Nav2DEnv(const Nav2DConfig& config) : config_(config) {
  config_.validate();

  // Barrier walls.
  const double th = config_.barrier_thickness;
  const double gap = config_.barrier_gap;
  if (config_.barrier == BarrierKind::kSquare) {
    const Eigen::Vector2d c = config_.start;
    const double s2 = config_.barrier_size / 2.0;
    const double lo = -s2 - th / 2.0;  // wall span including corner overlap
    const double hi = s2 + th / 2.0;
    // Per side: either one full wall or two segments around the gap.
    for (int side = 0; side < 4; ++side) {
      const bool gap_here = side == config_.barrier_gap_side % 4;
      const bool vertical = side == 0 || side == 2;  // +x / -x walls
      const double offset = (side == 0 || side == 1) ? s2 : -s2;
      auto add_segment = [&](double a, double b) {
        if (b - a < kContactEps) return;
        Rect r;
        const double mid = (a + b) / 2.0;
        const double half_len = (b - a) / 2.0;
        if (vertical) {
          r.center = c + Eigen::Vector2d(offset, mid);
          r.half = {th / 2.0, half_len};
        } else {
          r.center = c + Eigen::Vector2d(mid, offset);
          r.half = {half_len, th / 2.0};
        }
        walls_.push_back(r);
      };
      if (gap_here) {
        add_segment(lo, -gap / 2.0);
        add_segment(gap / 2.0, hi);
      } else {
        add_segment(lo, hi);
      }
    }
  } else if (config_.barrier == BarrierKind::kWall) {
    auto add_wall = [&](double y_lo, double y_hi) {
      if (y_hi - y_lo < kContactEps) return;
      Rect r;
      r.center = {config_.wall_x, (y_lo + y_hi) / 2.0};
      r.half = {th / 2.0, (y_hi - y_lo) / 2.0};
      walls_.push_back(r);
    };
    add_wall(0.0, config_.wall_gap_pos - gap / 2.0);
    add_wall(config_.wall_gap_pos + gap / 2.0, config_.workspace);
  }

  // Obstacles, rejected against start and goal clearance.
  Rng rng(seed_stream(config_.seed, 0x0b57));
  obstacles_.reserve(static_cast<std::size_t>(config_.n_obstacles));
  for (int i = 0; i < config_.n_obstacles; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
      Circle c;
      c.center = {rng.uniform(0.0, config_.workspace),
                  rng.uniform(0.0, config_.workspace)};
      c.radius = rng.uniform(config_.obstacle_radius_min, config_.obstacle_radius_max);
      const double clearance = c.radius + config_.r_safe;
      if ((c.center - config_.start).norm() <= clearance) continue;
      if ((c.center - config_.goal).norm() <= clearance) continue;
      obstacles_.push_back(c);
      placed = true;
    }
    if (!placed) {
      throw std::invalid_argument(
          "nav2d: could not place obstacle " + std::to_string(i) +
          " clear of start/goal within 100 attempts");
    }
  }
}

EnvState Nav2DEnv::reset(std::uint64_t seed) const {
  EnvState state;
  state.x = config_.start;
  state.k = 0;
  state.rng = seed_stream(seed, 0x5eed);
  return state;
}

double Nav2DEnv::obstacle_term(const Eigen::Vector2d& p) const {
  double term = 0.0;
  for (const Circle& c : obstacles_) {
    const double sd = (p - c.center).norm() - c.radius;
    const double v = hinge(config_.r_safe - sd);
    term += v * v;
  }
  for (const Rect& r : walls_) {
    const double v = hinge(config_.r_safe - r.signed_distance(p));
    term += v * v;
  }
  return config_.w_obstacle * term;
}

StepOutcome Nav2DEnv::step(const EnvState& state, const Vector& control) const {
  if (control.size() != 2) {
    throw std::invalid_argument("nav2d: control must be 2-dimensional");
  }
  StepOutcome out;

  Eigen::Vector2d u = control;
  const double speed = u.norm();
  if (speed > config_.v_max) {
    u *= config_.v_max / speed;
    out.control_clamped = true;
  }

  // Axis-separated motion with hard barrier walls; clamping each axis move
  // to the nearest wall face yields sliding and prevents tunneling.
  Eigen::Vector2d p(state.x[0], state.x[1]);
  for (int axis = 0; axis < 2; ++axis) {
    double target = p[axis] + u[axis] * config_.dt;
    for (const Rect& r : walls_) {
      const int other = 1 - axis;
      if (std::abs(p[other] - r.center[other]) >= r.half[other]) continue;
      const double lo = r.center[axis] - r.half[axis];
      const double hi = r.center[axis] + r.half[axis];
      if (p[axis] <= lo && target > lo - kContactEps) {
        target = std::min(target, lo - kContactEps);
      } else if (p[axis] >= hi && target < hi + kContactEps) {
        target = std::max(target, hi + kContactEps);
      }
    }
    p[axis] = target;
  }

  out.state = state;
  out.state.x = p;
  out.state.k = state.k + 1;

  if (!p.allFinite()) {
    out.fault = true;
    out.terms = {};
    out.reward = 0.0;
    return out;
  }

  out.terms.task = config_.w_task * (p - config_.goal).squaredNorm();
  out.terms.obstacle = obstacle_term(p);
  out.terms.control = config_.w_control * u.squaredNorm();
  out.reward = -(out.terms.task + out.terms.obstacle + out.terms.control);
  return out;
}

Vector Nav2DEnv::observe(const EnvState& state) const {
  Vector obs(4);
  obs << state.x[0], state.x[1], config_.goal.x(), config_.goal.y();
  return obs;
}

bool Nav2DEnv::success(const EnvState& state, double tolerance) const {
  return (Eigen::Vector2d(state.x[0], state.x[1]) - config_.goal).norm() <=
         tolerance;
}

}  // namespace traopt
