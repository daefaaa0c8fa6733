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

#ifndef HSIM_KERNELS_HPP
#define HSIM_KERNELS_HPP

#include <Eigen/Dense>
#include <vector>

#include "hsim/fock_tensor.hpp"

namespace hsim {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// Tensor contraction kernels behind every Fock-space gate. Each kernel has
// a serial reference implementation and an OpenMP variant that parallelizes
// over independent tensor slices; per-element summation order is identical
// in both, so results are bit-for-bit equal regardless of thread count.

enum class Exec {
  Auto,     // parallel when the tensor is large enough to pay off
  Serial,   // reference path
  Parallel  // force the OpenMP path
};

/// psi[..., n, ...] <- sum_k m(n, k) psi[..., k, ...] along axis `mode`.
void apply_one_mode(FockTensor& psi, const CMat& m, int mode, Exec exec = Exec::Auto);
void apply_one_mode_serial(FockTensor& psi, const CMat& m, int mode);
void apply_one_mode_parallel(FockTensor& psi, const CMat& m, int mode);

/// psi[..., n, ...] <- d(n) psi[..., n, ...] along axis `mode`.
void apply_diagonal(FockTensor& psi, const CVec& d, int mode, Exec exec = Exec::Auto);
void apply_diagonal_serial(FockTensor& psi, const CVec& d, int mode);
void apply_diagonal_parallel(FockTensor& psi, const CVec& d, int mode);

/// Photon-number-conserving two-mode action. blocks[T] is the
/// (T+1) x (T+1) matrix with entry (m_out, m_in) mapping
/// |m_in, T-m_in> on modes (mode_i, mode_j) to |m_out, T-m_out>.
/// Output occupations beyond either cutoff are dropped (truncation).
void apply_two_mode_blocks(FockTensor& psi, const std::vector<CMat>& blocks, int mode_i,
                           int mode_j, Exec exec = Exec::Auto);
void apply_two_mode_blocks_serial(FockTensor& psi, const std::vector<CMat>& blocks, int mode_i,
                                  int mode_j);
void apply_two_mode_blocks_parallel(FockTensor& psi, const std::vector<CMat>& blocks, int mode_i,
                                    int mode_j);

}  // namespace hsim

#endif
