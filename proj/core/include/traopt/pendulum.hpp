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
// Frictionless cart-pole, state (cart position, pole angle, cart velocity,
// pole angular velocity) with angle 0 upright and pi hanging down.
// Integrated with fixed-step RK4.

#pragma once

#include "traopt/env.hpp"

namespace traopt {

struct PendulumConfig {
  double cart_mass{1.0};        // kg
  double pole_mass{0.1};        // kg
  double pole_half_length{0.5}; // m
  double gravity{9.81};         // m/s^2
  double force_limit{10.0};     // N
  double dt{0.02};              // s
  int substeps{1};              // RK4 substeps per control step
  bool start_down{true};        // reset hanging down (swing-up) or upright

  double w_angle{1.0};
  double w_cart{0.1};
  double w_control{0.01};

  void validate() const;
};

/// Wraps an angle to (-pi, pi].
double wrap_angle(double theta);

class PendulumEnv final : public Environment {
 public:
  explicit PendulumEnv(const PendulumConfig& config);

  std::string name() const override { return "pendulum"; }
  int state_dim() const override { return 4; }
  int control_dim() const override { return 1; }
  double dt() const override { return config_.dt; }

  EnvState reset(std::uint64_t seed) const override;
  StepOutcome step(const EnvState& state, const Vector& control) const override;
  Vector observe(const EnvState& state) const override;

  /// Success when the wrapped pole angle is within the tolerance band.
  bool success(const EnvState& state, double tolerance) const override;

  const PendulumConfig& config() const { return config_; }

  /// Total mechanical energy; conserved under zero force.
  double energy(const EnvState& state) const;

 private:
  Eigen::Vector4d derivative(const Eigen::Vector4d& x, double force) const;

  PendulumConfig config_;
};

}  // namespace traopt
