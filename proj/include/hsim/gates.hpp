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

#ifndef HSIM_GATES_HPP
#define HSIM_GATES_HPP

#include <vector>

#include "hsim/clements.hpp"
#include "hsim/fock_tensor.hpp"
#include "hsim/gaussian.hpp"
#include "hsim/kernels.hpp"

namespace hsim {

// Fock-basis matrix elements of the Gaussian gate set. The conventions
// match the symplectic constructors in gaussian.hpp: see the comment there.

/// <m|S(r, phi)|n> at the given cutoff, via the stable three-term recurrence.
CMat squeezer_matrix(double r, double phi, int cutoff);

/// <m|D(alpha)|n> at the given cutoff.
CMat displacement_matrix(Complex alpha, int cutoff);

/// Diagonal of the phase shifter: e^{i lambda n}.
CVec phase_diagonal(double lambda, int cutoff);

/// Per-total-photon blocks of the beamsplitter BS(theta, phi) on a pair of
/// modes with cutoffs (ci, cj); blocks[T](m_out, m_in) maps |m_in, T-m_in>
/// to |m_out, T-m_out>. Single photon in the first mode goes to
/// cos(theta)|1,0> + e^{i phi} sin(theta)|0,1>.
std::vector<CMat> beamsplitter_blocks(double theta, double phi, int ci, int cj);

void apply_squeezer_fock(FockTensor& psi, double r, double phi, int mode, Exec exec = Exec::Auto);
void apply_displacement_fock(FockTensor& psi, Complex alpha, int mode, Exec exec = Exec::Auto);
void apply_phase_fock(FockTensor& psi, double lambda, int mode, Exec exec = Exec::Auto);
void apply_beamsplitter_fock(FockTensor& psi, double theta, double phi, int mode_i, int mode_j,
                             Exec exec = Exec::Auto);

/// Applies an N x N unitary interferometer as a rectangular mesh of
/// two-mode rotations and phases. Throws on non-unitary input.
void apply_interferometer(FockTensor& psi, const CMat& u, Exec exec = Exec::Auto);

/// Applies a precomputed mesh plan.
void apply_mesh(FockTensor& psi, const MeshPlan& plan, Exec exec = Exec::Auto);

/// Fock amplitudes of a pure Gaussian state: Bloch-Messiah of the state's
/// preparation symplectic V^{1/2}, applied gate by gate to vacuum, followed
/// by the displacement. Throws when the covariance is not pure.
FockTensor gaussian_to_fock(const CovarianceState& state, const std::vector<int>& cutoffs);

}  // namespace hsim

#endif
