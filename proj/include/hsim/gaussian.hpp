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

#ifndef HSIM_GAUSSIAN_HPP
#define HSIM_GAUSSIAN_HPP

#include <Eigen/Dense>
#include <complex>

namespace hsim {

// Quadrature conventions used throughout the project:
//   - hbar = 2, so the vacuum covariance matrix is the identity.
//   - quadrature ordering is (q_1..q_N, p_1..p_N), not interleaved.
//   - q = a + a^dag, p = i(a^dag - a); a phase shifter with unitary entry
//     e^{i lambda} maps |n> to e^{i lambda n}|n>.
//   - squeezer(r, phi) squeezes the q axis for phi = 0 (q -> e^{-r} q) and
//     rotates the squeeze axis by phi/2. The same convention is used for the
//     Fock-basis squeezer matrix elements.

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Gaussian state: real symmetric 2N x 2N covariance matrix and a real
/// displacement vector, qqpp ordered. Vacuum is V = I, xi = 0.
struct CovarianceState {
  Mat V;
  Vec xi;
  int modes = 0;

  static CovarianceState vacuum(int n_modes);
};

/// Real 2N x 2N matrix satisfying S Omega S^T = Omega.
struct SymplecticMatrix {
  Mat S;
  int modes = 0;
};

/// The standard symplectic form [[0, I], [-I, 0]] in qqpp ordering.
Mat symplectic_form(int n_modes);

/// Largest absolute entry of S Omega S^T - Omega.
double symplectic_defect(const Mat& S);

/// Single-mode squeezer embedded at `mode`; phi = 0 gives diag(e^-r, e^r)
/// on that mode's (q, p).
SymplecticMatrix symplectic_squeezer(double r, double phi, int mode, int n_modes);

/// Two-mode beamsplitter on modes (i, j); transmission cos^2(theta).
SymplecticMatrix symplectic_beamsplitter(double theta, double phi, int i, int j, int n_modes);

/// Phase shifter: unitary entry e^{i lambda} on `mode`.
SymplecticMatrix symplectic_phase(double lambda, int mode, int n_modes);

/// Orthogonal symplectic matrix equivalent to the N x N unitary U
/// (passive transformation a -> U a).
SymplecticMatrix symplectic_from_unitary(const CMat& U);

/// Inverse of symplectic_from_unitary; throws if S is not orthogonal
/// symplectic within `tol`.
CMat unitary_from_orthosymplectic(const Mat& S, double tol = 1e-8);

/// V -> S V S^T, xi -> S xi.
CovarianceState apply_symplectic(const CovarianceState& state, const SymplecticMatrix& S);

/// Pure-loss channel of transmissivity eta on one mode:
/// block-wise V -> eta V + (1 - eta) I with sqrt(eta) cross terms.
CovarianceState apply_loss_cov(const CovarianceState& state, double eta, int mode);

/// Displace one mode by alpha (hbar = 2: <q> += 2 Re alpha, <p> += 2 Im alpha).
CovarianceState apply_displacement_cov(const CovarianceState& state, std::complex<double> alpha,
                                       int mode);

/// Gaussian Wigner function at the phase-space point x (length 2N).
double wigner_eval(const CovarianceState& state, const Vec& x);

/// Smallest eigenvalue of V + i Omega; >= -tol means the uncertainty
/// relation holds.
double uncertainty_min_eigenvalue(const CovarianceState& state);

/// True when V is (numerically) the covariance of a pure state,
/// i.e. V itself is symplectic.
bool is_pure_covariance(const CovarianceState& state, double tol = 1e-8);

}  // namespace hsim

#endif
