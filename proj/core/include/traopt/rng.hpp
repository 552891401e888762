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

#pragma once

#include <cstdint>

namespace traopt {

// Quantile function of the standard normal distribution (Wichura's AS 241,
// double-precision branch). Absolute error is far below 1e-9 over (0, 1).
double inverse_normal_cdf(double p);

// Derives an independent stream seed from a base seed and a stream index.
std::uint64_t seed_stream(std::uint64_t seed, std::uint64_t stream);

// SplitMix64. Used everywhere randomness is needed so that results are
// bit-reproducible across platforms and standard-library versions
// (std::normal_distribution and friends are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in the open interval (0, 1); never returns 0 or 1, so the
  // value is always a valid argument for inverse_normal_cdf.
  double u01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  // Uniform integer in [0, n). n must be positive.
  int uniform_int(int n) {
    return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n));
  }

  double normal() { return inverse_normal_cdf(u01()); }

 private:
  std::uint64_t state_;
};

}  // namespace traopt
