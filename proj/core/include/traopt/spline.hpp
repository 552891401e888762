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
// Catmull-Rom spline representation of trajectories. A trajectory is either
// a compact set of control nodes (D x K) or a dense sample matrix (D x T);
// the two are linked by a precomputed basis matrix phi (K x T) and its
// least-squares right pseudo-inverse (T x K):
//
//     dense = nodes * phi        nodes = dense * phi_pinv
//
// Node times are uniformly spaced over the dense horizon, with node 0 at
// the first dense sample and node K-1 at the last. End segments use
// reflected ghost nodes (P_{-1} = 2 P_0 - P_1 and symmetrically at the
// tail), which keeps endpoint interpolation, partition of unity, and exact
// reproduction of affine node sequences.

#pragma once

#include "traopt/types.hpp"

namespace traopt {

/// Uniform Catmull-Rom (tension 1/2) weights of the four control points
/// bounding a segment, at local parameter t in [0, 1]. Weights sum to 1;
/// t = 0 selects the segment's start node, t = 1 its end node.
/// Throws std::domain_error outside [0, 1].
Eigen::Vector4d segment_weights(double t);

/// Weights of all K real nodes at node coordinate x in [0, K-1], with ghost
/// contributions at the ends folded back by reflection. At most 4 entries
/// are nonzero and they sum to 1.
Vector basis_column(double node_coord, int node_count);

/// Basis matrix phi (K x T) and its right pseudo-inverse (T x K), cached
/// per (K, T) by callers. phi * phi_pinv = I within 1e-9.
struct BasisPair {
  Matrix phi;
  Matrix phi_pinv;

  int nodes() const { return static_cast<int>(phi.rows()); }
  int steps() const { return static_cast<int>(phi.cols()); }
};

/// Builds the BasisPair for K nodes over T dense steps.
/// Requires K >= 4 and T >= K (std::invalid_argument otherwise); a basis
/// that fails the pseudo-inverse identity check raises std::runtime_error.
BasisPair build_basis(int node_count, int step_count);

/// dense = nodes * phi.
DenseTrajectory nodes_to_dense(const NodeTrajectory& nodes,
                               const BasisPair& basis, double dt = 1.0);

/// Least-squares node recovery, nodes = dense * phi_pinv. Exact (to 1e-9)
/// for trajectories produced by nodes_to_dense.
NodeTrajectory dense_to_nodes(const DenseTrajectory& dense,
                              const BasisPair& basis);

/// Continuous spline evaluation at node coordinate x in [0, K-1]; returns
/// the D-vector value. Agrees with nodes_to_dense at dense sample times.
Vector evaluate(const NodeTrajectory& nodes, double node_coord);

}  // namespace traopt
