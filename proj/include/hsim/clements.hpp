/**
 * Copyright 2026 heraldsim contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HSIM_CLEMENTS_HPP
#define HSIM_CLEMENTS_HPP

#include <Eigen/Dense>
#include <vector>

namespace hsim {

/// One primitive step of a rectangular mesh: either a phase shifter on
/// `mode` (theta unused) or a real beamsplitter rotation
/// [[cos t, -sin t], [sin t, cos t]] on modes (mode, mode+1).
struct MeshStep {
  enum class Kind { Phase, Beamsplitter };
  Kind kind;
  int mode;
  double value;  // phase lambda or rotation angle theta
};

/// Gate sequence realizing an N x N unitary; steps apply in order.
struct MeshPlan {
  int modes = 0;
  std::vector<MeshStep> steps;

  /// Product of the step unitaries; equals the decomposed matrix up to
  /// numerical error.
  Eigen::MatrixXcd reconstruct() const;
};

/// Rectangular (Clements-ordered) decomposition into nearest-neighbour
/// beamsplitters and phase shifters. Throws when U is not unitary
/// within `tol`.
MeshPlan clements_decompose(const Eigen::MatrixXcd& u, double tol = 1e-10);

/// Largest absolute entry of U^dag U - I.
double unitarity_defect(const Eigen::MatrixXcd& u);

}  // namespace hsim

#endif
