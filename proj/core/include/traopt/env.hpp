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
// Environment contract. Environments are immutable worlds; all mutable
// state lives in EnvState and stepping is a pure function of (state,
// control), so rollout lanes can share one environment instance across
// threads and snapshots are plain value copies.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "traopt/types.hpp"

namespace traopt {

struct EnvState {
  Vector x;              // environment-specific state vector
  std::int64_t k{0};     // time index
  std::uint64_t rng{0};  // RNG cursor for stochastic environments

  /// Bit-exact equality (doubles compared by representation).
  bool equals(const EnvState& other) const;
};

/// Stage-cost decomposition; each term is >= 0 and the scalar step reward
/// is exactly -(task + obstacle + control).
struct StageCostTerms {
  double task{0.0};
  double obstacle{0.0};
  double control{0.0};

  double sum() const { return task + obstacle + control; }
};

struct StepOutcome {
  EnvState state;
  double reward{0.0};
  StageCostTerms terms;
  bool control_clamped{false};
  bool fault{false};  // non-finite state after stepping
};

class Environment {
 public:
  virtual ~Environment() = default;

  virtual std::string name() const = 0;
  virtual int state_dim() const = 0;
  virtual int control_dim() const = 0;
  virtual double dt() const = 0;

  /// Deterministic initial state for the given seed.
  virtual EnvState reset(std::uint64_t seed) const = 0;

  /// Advances one step under the given control (clamped to bounds if
  /// necessary). Never throws on dynamics divergence; sets fault instead.
  virtual StepOutcome step(const EnvState& state, const Vector& control) const = 0;

  /// Observation handed to policies.
  virtual Vector observe(const EnvState& state) const = 0;

  /// Task completion at the given tolerance (meters for navigation,
  /// radians of angle band for the pendulum).
  virtual bool success(const EnvState& state, double tolerance) const = 0;
};

/// Exponentially discounted total cost of a reward sequence:
/// J = e^{-alpha T dt} * terminal + sum_k e^{-alpha dt k} * (-reward_k) * dt.
double total_cost(const Vector& rewards, double alpha, double dt,
                  double terminal);

/// Byte serialization of EnvState. restore(snapshot(s)) equals s bit-exactly
/// including the RNG cursor; blobs are stable across processes. restore
/// throws std::runtime_error on truncated or corrupted input.
std::string snapshot(const EnvState& state);
EnvState restore(std::string_view blob);

}  // namespace traopt
