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
// Sampling-based trajectory optimizers over spline node space.
//
// Weighted basis function optimization (wbfo_step): N perturbed node sets
// are rolled out densely; step rewards are discount-accumulated, mapped to
// per-node weights through the basis (W = R_acc * phi^T), z-normalized per
// node across samples, and combined by a per-node softmax, so each node is
// a convex combination of the sampled node values. gamma = 0 uses step
// rewards directly; gamma > 0 is the action-value variant.
//
// The MPPI baseline (mppi_step) samples the same node space but weights
// whole trajectories by exp(-(J - min J) / lambda) with J the negated total
// reward.
//
// Both steps reserve sample 0 for the zero-noise prior so the candidate set
// always contains the incumbent. The node update minus the prior, together
// with the noise scale that produced it, is exported as a score estimate
// (delta / sigma^2 approximates the gradient of the log of the smoothed
// cost distribution).

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "traopt/noise.hpp"
#include "traopt/spline.hpp"
#include "traopt/types.hpp"

namespace traopt {

enum class Algorithm { kWbfo, kAvwbfo, kMppi };

Algorithm algorithm_from_string(const std::string& name);
std::string to_string(Algorithm algorithm);

struct OptimizerConfig {
  Algorithm algorithm{Algorithm::kWbfo};
  int n_samples{32};
  double gamma{0.0};   // discount for accumulated rewards; 0 = step rewards
  double lambda{1.0};  // MPPI temperature
  bool mppi_dense_noise{false};  // MPPI perturbs dense timesteps instead of nodes

  /// Throws std::invalid_argument if fields are inconsistent (e.g. a wbfo
  /// configuration with gamma > 0).
  void validate() const;
};

/// Evaluates N candidate dense trajectories to an N x T step-reward matrix
/// (higher is better). Row order must match candidate order.
using Evaluator =
    std::function<Matrix(const std::vector<DenseTrajectory>& candidates)>;

/// Node update expressed as a one-step score estimate: delta = updated -
/// prior nodes (D x K) and the per-node sigma that generated the samples.
struct ScoreEstimate {
  Matrix delta;
  Vector sigma_used;
};

struct StepResult {
  NodeTrajectory nodes;
  ScoreEstimate score;
};

/// Suffix-discounted reward accumulation per row:
/// acc(i,t) = sum_{s>=t} r(i,s) * gamma^{s-t}. gamma = 0 returns the input
/// unchanged. Requires gamma in [0, 1].
Matrix accumulate_rewards(const Matrix& rewards, double gamma);

/// Node weight matrix W = R_acc * phi^T (N x K).
Matrix node_weights(const Matrix& accumulated, const BasisPair& basis);

/// Per-node z-normalization across samples (population std). Nodes whose
/// std falls below 1e-12 get all-zero weights, which the softmax turns into
/// a uniform average. A single-sample matrix normalizes to zeros.
Matrix normalize_weights(const Matrix& weights);

/// Per-node softmax combination: P+(:,k) = sum_i softmax_i(W(:,k)) P_i(:,k),
/// guarded by max-subtraction and clamped to the per-node sample hull.
NodeTrajectory softmax_update(const Matrix& normalized,
                              const std::vector<NodeTrajectory>& samples);

/// One weighted-basis-function optimization iteration.
StepResult wbfo_step(const NodeTrajectory& prior, const BasisPair& basis,
                     const NoiseSchedule& schedule, int iteration,
                     const Evaluator& evaluator, const OptimizerConfig& config,
                     double dt = 1.0);

/// One MPPI iteration over the same node space (or dense space when
/// config.mppi_dense_noise is set).
StepResult mppi_step(const NodeTrajectory& prior, const BasisPair& basis,
                     const NoiseSchedule& schedule, int iteration,
                     const Evaluator& evaluator, const OptimizerConfig& config,
                     double dt = 1.0);

/// Dispatches on config.algorithm.
StepResult optimizer_step(const NodeTrajectory& prior, const BasisPair& basis,
                          const NoiseSchedule& schedule, int iteration,
                          const Evaluator& evaluator,
                          const OptimizerConfig& config, double dt = 1.0);

/// delta = updated - prior, recorded with the sigma of this iteration.
ScoreEstimate score_export(const NodeTrajectory& prior,
                           const NodeTrajectory& updated,
                           const NoiseSchedule& schedule, int iteration);

}  // namespace traopt
