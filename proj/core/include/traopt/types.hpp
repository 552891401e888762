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

#include <Eigen/Dense>

namespace traopt {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Compact trajectory decision variable: one control-node value per
/// dimension and node. data is D x K (dimensions x nodes). Node times are
/// implicit and uniformly spaced over the dense horizon.
struct NodeTrajectory {
  Matrix data;

  NodeTrajectory() = default;
  explicit NodeTrajectory(Matrix m) : data(std::move(m)) {}
  static NodeTrajectory zero(int dims, int nodes) {
    return NodeTrajectory(Matrix::Zero(dims, nodes));
  }

  int dims() const { return static_cast<int>(data.rows()); }
  int nodes() const { return static_cast<int>(data.cols()); }
};

/// Dense control sequence executed by an environment: data is D x T
/// (dimensions x timesteps), dt seconds per step.
struct DenseTrajectory {
  Matrix data;
  double dt{1.0};

  DenseTrajectory() = default;
  DenseTrajectory(Matrix m, double step_dt) : data(std::move(m)), dt(step_dt) {}

  int dims() const { return static_cast<int>(data.rows()); }
  int steps() const { return static_cast<int>(data.cols()); }
};

}  // namespace traopt
