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
// Perturbation tensors for sampling candidate node sets. Noise magnitude is
// the product of an exponential per-iteration decay and a linear ramp over
// the horizon (small near-term, large far-term), and draws come from either
// plain Monte Carlo or Latin Hypercube stratification mapped through the
// inverse normal CDF.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "traopt/types.hpp"

namespace traopt {

enum class NoiseSource { kMonteCarlo, kLatinHypercube };

NoiseSource noise_source_from_string(const std::string& name);
std::string to_string(NoiseSource source);

struct NoiseSchedule {
  double sigma0{3.0};    // initial standard deviation, control units
  double decay{0.6};     // per-iteration multiplicative factor in (0, 1]
  double ramp_near{1.0}; // relative scale at the first node
  double ramp_far{1.0};  // relative scale at the last node, >= ramp_near
  NoiseSource source{NoiseSource::kMonteCarlo};
  std::uint64_t seed{0};

  /// Throws std::invalid_argument on violated field constraints.
  void validate() const;
};

/// One D x K perturbation matrix per sample.
struct NoiseTensor {
  std::vector<Matrix> sample;

  int count() const { return static_cast<int>(sample.size()); }
};

/// Per-node standard deviations at a given iteration:
/// sigma0 * decay^iteration * ramp(k), with ramp linear from ramp_near at
/// node 0 to ramp_far at node K-1.
Vector sigma_at(const NoiseSchedule& schedule, int iteration, int node_count);

/// Latin hypercube design on [0,1)^dims: for every dimension the N values
/// occupy the N strata [j/N, (j+1)/N) exactly once, with an independent
/// random stratum permutation per dimension and uniform offsets within
/// strata. Deterministic in the seed.
Matrix lhs_unit(int samples, int dims, std::uint64_t seed);

/// N zero-mean Gaussian perturbations of shape D x K, scaled per node by
/// sigma_at(schedule, iteration). Monte Carlo draws i.i.d.; Latin Hypercube
/// stratifies over the flattened D*K dimensions before the normal map.
/// Deterministic in (schedule, iteration, N, D, K).
NoiseTensor gaussian_noise(const NoiseSchedule& schedule, int iteration,
                           int samples, int dims, int nodes);

}  // namespace traopt
