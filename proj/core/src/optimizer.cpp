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

#include "traopt/optimizer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace traopt {
namespace {

constexpr double kDegenerateStd = 1e-12;

Matrix evaluate_candidates(const Evaluator& evaluator,
                           const std::vector<DenseTrajectory>& candidates,
                           int steps) {
  Matrix rewards;
  try {
    rewards = evaluator(candidates);
  } catch (const std::exception& e) {
    throw std::runtime_error("evaluator failed on a batch of " +
                             std::to_string(candidates.size()) +
                             " candidates: " + e.what());
  }
  if (rewards.rows() != static_cast<Eigen::Index>(candidates.size()) ||
      rewards.cols() != steps) {
    throw std::invalid_argument(
        "evaluator returned a " + std::to_string(rewards.rows()) + "x" +
        std::to_string(rewards.cols()) + " reward matrix, expected " +
        std::to_string(candidates.size()) + "x" + std::to_string(steps));
  }
  if (!rewards.allFinite()) {
    throw std::invalid_argument("evaluator returned non-finite rewards");
  }
  return rewards;
}

// Perturbed node sets with sample 0 reserved for the zero-noise prior.
std::vector<NodeTrajectory> sample_candidates(const NodeTrajectory& prior,
                                              const NoiseSchedule& schedule,
                                              int iteration, int n_samples) {
  const NoiseTensor noise = gaussian_noise(schedule, iteration, n_samples,
                                           prior.dims(), prior.nodes());
  std::vector<NodeTrajectory> samples;
  samples.reserve(static_cast<std::size_t>(n_samples));
  samples.emplace_back(prior.data);
  for (int n = 1; n < n_samples; ++n) {
    samples.emplace_back(prior.data + noise.sample[static_cast<std::size_t>(n)]);
  }
  return samples;
}

// Convex combination of sample node values with per-node weights that sum
// to 1, clamped to the per-node sample hull so rounding can never leave it.
NodeTrajectory weighted_nodes(const std::vector<Vector>& weights_per_node,
                              const std::vector<NodeTrajectory>& samples) {
  const int dims = samples.front().dims();
  const int nodes = samples.front().nodes();
  const int n = static_cast<int>(samples.size());
  NodeTrajectory out = NodeTrajectory::zero(dims, nodes);
  for (int k = 0; k < nodes; ++k) {
    const Vector& w = weights_per_node[static_cast<std::size_t>(k)];
    Vector lo = samples.front().data.col(k);
    Vector hi = lo;
    Vector acc = Vector::Zero(dims);
    for (int i = 0; i < n; ++i) {
      const auto col = samples[static_cast<std::size_t>(i)].data.col(k);
      acc += w[i] * col;
      lo = lo.cwiseMin(col);
      hi = hi.cwiseMax(col);
    }
    out.data.col(k) = acc.cwiseMax(lo).cwiseMin(hi);
  }
  return out;
}

}  // namespace

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "wbfo") return Algorithm::kWbfo;
  if (name == "avwbfo") return Algorithm::kAvwbfo;
  if (name == "mppi") return Algorithm::kMppi;
  throw std::invalid_argument("unknown algorithm '" + name +
                              "' (use wbfo, avwbfo or mppi)");
}

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kWbfo: return "wbfo";
    case Algorithm::kAvwbfo: return "avwbfo";
    case Algorithm::kMppi: return "mppi";
  }
  return "?";
}

void OptimizerConfig::validate() const {
  if (n_samples < 1) {
    throw std::invalid_argument("opt.n_samples must be >= 1");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("opt.gamma must lie in [0, 1]");
  }
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("opt.lambda must be > 0");
  }
  if (algorithm == Algorithm::kWbfo && gamma != 0.0) {
    throw std::invalid_argument("wbfo uses step rewards; set opt.gamma = 0");
  }
  if (algorithm == Algorithm::kAvwbfo && gamma == 0.0) {
    throw std::invalid_argument("avwbfo requires opt.gamma > 0");
  }
}

Matrix accumulate_rewards(const Matrix& rewards, double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("accumulate_rewards: gamma must lie in [0, 1]");
  }
  if (gamma == 0.0) {
    return rewards;  // gamma^0 = 1 convention: acc(i,t) = r(i,t)
  }
  Matrix acc(rewards.rows(), rewards.cols());
  const Eigen::Index last = rewards.cols() - 1;
  acc.col(last) = rewards.col(last);
  for (Eigen::Index t = last - 1; t >= 0; --t) {
    acc.col(t) = rewards.col(t) + gamma * acc.col(t + 1);
  }
  return acc;
}

Matrix node_weights(const Matrix& accumulated, const BasisPair& basis) {
  if (accumulated.cols() != basis.steps()) {
    throw std::invalid_argument("node_weights: reward matrix has " +
                                std::to_string(accumulated.cols()) +
                                " columns, basis expects " +
                                std::to_string(basis.steps()));
  }
  return accumulated * basis.phi.transpose();
}

Matrix normalize_weights(const Matrix& weights) {
  const Eigen::Index n = weights.rows();
  Matrix normalized = Matrix::Zero(weights.rows(), weights.cols());
  if (n < 2) {
    return normalized;  // std over a single sample is undefined
  }
  for (Eigen::Index k = 0; k < weights.cols(); ++k) {
    const double mean = weights.col(k).mean();
    const double var =
        (weights.col(k).array() - mean).square().sum() / static_cast<double>(n);
    const double stddev = std::sqrt(var);
    if (stddev < kDegenerateStd) {
      continue;  // degenerate tie: leave zeros, softmax becomes uniform
    }
    normalized.col(k) = (weights.col(k).array() - mean) / stddev;
  }
  return normalized;
}

NodeTrajectory softmax_update(const Matrix& normalized,
                              const std::vector<NodeTrajectory>& samples) {
  const int n = static_cast<int>(samples.size());
  if (n == 0) {
    throw std::invalid_argument("softmax_update: no samples");
  }
  const int nodes = samples.front().nodes();
  if (normalized.rows() != n || normalized.cols() != nodes) {
    throw std::invalid_argument("softmax_update: weight matrix is " +
                                std::to_string(normalized.rows()) + "x" +
                                std::to_string(normalized.cols()) + ", expected " +
                                std::to_string(n) + "x" + std::to_string(nodes));
  }
  std::vector<Vector> weights(static_cast<std::size_t>(nodes));
  for (int k = 0; k < nodes; ++k) {
    const Vector shifted =
        normalized.col(k).array() - normalized.col(k).maxCoeff();
    Vector w = shifted.array().exp();
    weights[static_cast<std::size_t>(k)] = w / w.sum();
  }
  return weighted_nodes(weights, samples);
}

StepResult wbfo_step(const NodeTrajectory& prior, const BasisPair& basis,
                     const NoiseSchedule& schedule, int iteration,
                     const Evaluator& evaluator, const OptimizerConfig& config,
                     double dt) {
  config.validate();
  if (prior.nodes() != basis.nodes()) {
    throw std::invalid_argument("wbfo_step: prior node count does not match basis");
  }
  const std::vector<NodeTrajectory> samples =
      sample_candidates(prior, schedule, iteration, config.n_samples);
  std::vector<DenseTrajectory> candidates;
  candidates.reserve(samples.size());
  for (const auto& s : samples) candidates.push_back(nodes_to_dense(s, basis, dt));

  const Matrix rewards = evaluate_candidates(evaluator, candidates, basis.steps());
  const Matrix accumulated = accumulate_rewards(rewards, config.gamma);
  const Matrix normalized = normalize_weights(node_weights(accumulated, basis));
  NodeTrajectory updated = softmax_update(normalized, samples);

  StepResult result;
  result.score = score_export(prior, updated, schedule, iteration);
  result.nodes = std::move(updated);
  return result;
}

StepResult mppi_step(const NodeTrajectory& prior, const BasisPair& basis,
                     const NoiseSchedule& schedule, int iteration,
                     const Evaluator& evaluator, const OptimizerConfig& config,
                     double dt) {
  config.validate();
  if (prior.nodes() != basis.nodes()) {
    throw std::invalid_argument("mppi_step: prior node count does not match basis");
  }

  std::vector<NodeTrajectory> samples;
  std::vector<DenseTrajectory> candidates;
  candidates.reserve(static_cast<std::size_t>(config.n_samples));
  if (config.mppi_dense_noise) {
    // Dense-space variant: perturb every timestep instead of every node.
    const DenseTrajectory prior_dense = nodes_to_dense(prior, basis, dt);
    const NoiseTensor noise = gaussian_noise(schedule, iteration, config.n_samples,
                                             prior.dims(), basis.steps());
    for (int n = 0; n < config.n_samples; ++n) {
      Matrix u = prior_dense.data;
      if (n > 0) u += noise.sample[static_cast<std::size_t>(n)];
      candidates.emplace_back(std::move(u), dt);
    }
  } else {
    samples = sample_candidates(prior, schedule, iteration, config.n_samples);
    for (const auto& s : samples) candidates.push_back(nodes_to_dense(s, basis, dt));
  }

  const Matrix rewards = evaluate_candidates(evaluator, candidates, basis.steps());

  // Whole-trajectory costs with min-baseline subtraction.
  Vector cost = -rewards.rowwise().sum();
  cost.array() -= cost.minCoeff();
  Vector w = (-cost / config.lambda).array().exp();
  w /= w.sum();

  NodeTrajectory updated;
  if (config.mppi_dense_noise) {
    Matrix dense = Matrix::Zero(prior.dims(), basis.steps());
    for (int n = 0; n < config.n_samples; ++n) {
      dense += w[n] * candidates[static_cast<std::size_t>(n)].data;
    }
    updated = dense_to_nodes(DenseTrajectory(std::move(dense), dt), basis);
  } else {
    std::vector<Vector> per_node(static_cast<std::size_t>(basis.nodes()), w);
    updated = weighted_nodes(per_node, samples);
  }

  StepResult result;
  result.score = score_export(prior, updated, schedule, iteration);
  result.nodes = std::move(updated);
  return result;
}

StepResult optimizer_step(const NodeTrajectory& prior, const BasisPair& basis,
                          const NoiseSchedule& schedule, int iteration,
                          const Evaluator& evaluator,
                          const OptimizerConfig& config, double dt) {
  if (config.algorithm == Algorithm::kMppi) {
    return mppi_step(prior, basis, schedule, iteration, evaluator, config, dt);
  }
  return wbfo_step(prior, basis, schedule, iteration, evaluator, config, dt);
}

ScoreEstimate score_export(const NodeTrajectory& prior,
                           const NodeTrajectory& updated,
                           const NoiseSchedule& schedule, int iteration) {
  if (prior.data.rows() != updated.data.rows() ||
      prior.data.cols() != updated.data.cols()) {
    throw std::invalid_argument("score_export: prior and updated shapes differ");
  }
  ScoreEstimate score;
  score.delta = updated.data - prior.data;
  score.sigma_used = sigma_at(schedule, iteration, prior.nodes());
  return score;
}

}  // namespace traopt
