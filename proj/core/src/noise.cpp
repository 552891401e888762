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

#include "traopt/noise.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "traopt/rng.hpp"

namespace traopt {

NoiseSource noise_source_from_string(const std::string& name) {
  if (name == "mc" || name == "montecarlo" || name == "monte_carlo") {
    return NoiseSource::kMonteCarlo;
  }
  if (name == "lhs" || name == "latinhypercube" || name == "latin_hypercube") {
    return NoiseSource::kLatinHypercube;
  }
  throw std::invalid_argument("unknown noise source '" + name + "' (use mc or lhs)");
}

std::string to_string(NoiseSource source) {
  return source == NoiseSource::kMonteCarlo ? "mc" : "lhs";
}

void NoiseSchedule::validate() const {
  if (!(sigma0 > 0.0)) {
    throw std::invalid_argument("noise.sigma0 must be > 0");
  }
  if (!(decay > 0.0 && decay <= 1.0)) {
    throw std::invalid_argument("noise.decay must lie in (0, 1]");
  }
  if (!(ramp_near >= 0.0) || !(ramp_far >= ramp_near)) {
    throw std::invalid_argument("noise ramp requires 0 <= ramp_near <= ramp_far");
  }
}

Vector sigma_at(const NoiseSchedule& schedule, int iteration, int node_count) {
  if (iteration < 0) {
    throw std::invalid_argument("sigma_at: iteration must be >= 0");
  }
  const double level = schedule.sigma0 * std::pow(schedule.decay, iteration);
  Vector sigma(node_count);
  for (int k = 0; k < node_count; ++k) {
    const double frac =
        node_count > 1 ? static_cast<double>(k) / static_cast<double>(node_count - 1)
                       : 0.0;
    sigma[k] = level * (schedule.ramp_near + (schedule.ramp_far - schedule.ramp_near) * frac);
  }
  return sigma;
}

Matrix lhs_unit(int samples, int dims, std::uint64_t seed) {
  if (samples < 1 || dims < 1) {
    throw std::invalid_argument("lhs_unit: samples and dims must be >= 1");
  }
  Rng rng(seed_stream(seed, 0x1a75));
  Matrix design(samples, dims);
  std::vector<int> strata(static_cast<std::size_t>(samples));
  for (int m = 0; m < dims; ++m) {
    std::iota(strata.begin(), strata.end(), 0);
    // Fisher-Yates permutation of stratum assignments for this dimension.
    for (int j = samples - 1; j > 0; --j) {
      std::swap(strata[static_cast<std::size_t>(j)],
                strata[static_cast<std::size_t>(rng.uniform_int(j + 1))]);
    }
    for (int n = 0; n < samples; ++n) {
      design(n, m) = (static_cast<double>(strata[static_cast<std::size_t>(n)]) +
                      rng.u01()) /
                     static_cast<double>(samples);
    }
  }
  return design;
}

NoiseTensor gaussian_noise(const NoiseSchedule& schedule, int iteration,
                           int samples, int dims, int nodes) {
  schedule.validate();
  if (samples < 1 || dims < 1 || nodes < 1) {
    throw std::invalid_argument("gaussian_noise: samples, dims, nodes must be >= 1");
  }
  const Vector sigma = sigma_at(schedule, iteration, nodes);
  const std::uint64_t stream =
      seed_stream(schedule.seed, static_cast<std::uint64_t>(iteration));

  NoiseTensor tensor;
  tensor.sample.resize(static_cast<std::size_t>(samples));
  for (auto& m : tensor.sample) m.setZero(dims, nodes);

  if (schedule.source == NoiseSource::kLatinHypercube) {
    const Matrix unit = lhs_unit(samples, dims * nodes, stream);
    for (int n = 0; n < samples; ++n) {
      for (int d = 0; d < dims; ++d) {
        for (int k = 0; k < nodes; ++k) {
          tensor.sample[static_cast<std::size_t>(n)](d, k) =
              inverse_normal_cdf(unit(n, d * nodes + k)) * sigma[k];
        }
      }
    }
  } else {
    Rng rng(stream);
    for (int n = 0; n < samples; ++n) {
      for (int d = 0; d < dims; ++d) {
        for (int k = 0; k < nodes; ++k) {
          tensor.sample[static_cast<std::size_t>(n)](d, k) = rng.normal() * sigma[k];
        }
      }
    }
  }
  return tensor;
}

}  // namespace traopt
