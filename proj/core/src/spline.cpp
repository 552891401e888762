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

#include "traopt/spline.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <stdexcept>
#include <string>

namespace traopt {

Eigen::Vector4d segment_weights(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::domain_error("segment_weights: t must lie in [0, 1], got " +
                            std::to_string(t));
  }
  const double t2 = t * t;
  const double t3 = t2 * t;
  Eigen::Vector4d w;
  w[0] = 0.5 * (-t + 2.0 * t2 - t3);
  w[1] = 0.5 * (2.0 - 5.0 * t2 + 3.0 * t3);
  w[2] = 0.5 * (t + 4.0 * t2 - 3.0 * t3);
  w[3] = 0.5 * (-t2 + t3);
  return w;
}

Vector basis_column(double node_coord, int node_count) {
  const int K = node_count;
  if (K < 2) {
    throw std::invalid_argument("basis_column: need at least 2 nodes");
  }
  if (!(node_coord >= 0.0 && node_coord <= static_cast<double>(K - 1))) {
    throw std::domain_error("basis_column: coordinate outside [0, K-1]");
  }
  int seg = static_cast<int>(std::floor(node_coord));
  if (seg > K - 2) seg = K - 2;  // node_coord == K-1 lands in the last segment
  const double t = node_coord - static_cast<double>(seg);
  const Eigen::Vector4d w = segment_weights(t);

  Vector column = Vector::Zero(K);
  // Support nodes seg-1 .. seg+2; ghosts are reflected: a weight w on ghost
  // P_{-1} = 2 P_0 - P_1 becomes +2w on node 0 and -w on node 1 (and
  // symmetrically at the tail).
  for (int j = 0; j < 4; ++j) {
    const int node = seg - 1 + j;
    if (node < 0) {
      column[0] += 2.0 * w[j];
      column[1] -= w[j];
    } else if (node > K - 1) {
      column[K - 1] += 2.0 * w[j];
      column[K - 2] -= w[j];
    } else {
      column[node] += w[j];
    }
  }
  return column;
}

BasisPair build_basis(int node_count, int step_count) {
  const int K = node_count;
  const int T = step_count;
  if (K < 4) {
    throw std::invalid_argument("build_basis: node count must be >= 4, got " +
                                std::to_string(K));
  }
  if (T < K) {
    throw std::invalid_argument("build_basis: step count must be >= node count (" +
                                std::to_string(T) + " < " + std::to_string(K) + ")");
  }

  BasisPair basis;
  basis.phi.resize(K, T);
  const double scale = static_cast<double>(K - 1) / static_cast<double>(T - 1);
  for (int s = 0; s < T; ++s) {
    basis.phi.col(s) = basis_column(static_cast<double>(s) * scale, K);
  }

  // Right pseudo-inverse phi^T (phi phi^T)^{-1} via Cholesky of the Gram
  // matrix; phi has full row rank for uniform spacing.
  const Matrix gram = basis.phi * basis.phi.transpose();
  Eigen::LLT<Matrix> llt(gram);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("build_basis: basis Gram matrix is not positive definite");
  }
  basis.phi_pinv = llt.solve(basis.phi).transpose();

  const double identity_err =
      (basis.phi * basis.phi_pinv - Matrix::Identity(K, K)).cwiseAbs().maxCoeff();
  if (!(identity_err <= 1e-9)) {
    throw std::runtime_error("build_basis: pseudo-inverse check failed, error " +
                             std::to_string(identity_err));
  }
  return basis;
}

DenseTrajectory nodes_to_dense(const NodeTrajectory& nodes,
                               const BasisPair& basis, double dt) {
  if (nodes.nodes() != basis.nodes()) {
    throw std::invalid_argument("nodes_to_dense: trajectory has " +
                                std::to_string(nodes.nodes()) + " nodes, basis expects " +
                                std::to_string(basis.nodes()));
  }
  return DenseTrajectory(nodes.data * basis.phi, dt);
}

NodeTrajectory dense_to_nodes(const DenseTrajectory& dense,
                              const BasisPair& basis) {
  if (dense.steps() != basis.steps()) {
    throw std::invalid_argument("dense_to_nodes: trajectory has " +
                                std::to_string(dense.steps()) + " steps, basis expects " +
                                std::to_string(basis.steps()));
  }
  return NodeTrajectory(dense.data * basis.phi_pinv);
}

Vector evaluate(const NodeTrajectory& nodes, double node_coord) {
  return nodes.data * basis_column(node_coord, nodes.nodes());
}

}  // namespace traopt
