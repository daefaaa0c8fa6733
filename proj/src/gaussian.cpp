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

#include "hsim/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hsim {

namespace {

void check_mode(int mode, int n_modes) {
  if (mode < 0 || mode >= n_modes) {
    throw std::out_of_range("mode index out of range");
  }
}

}  // namespace

CovarianceState CovarianceState::vacuum(int n_modes) {
  CovarianceState s;
  s.V = Mat::Identity(2 * n_modes, 2 * n_modes);
  s.xi = Vec::Zero(2 * n_modes);
  s.modes = n_modes;
  return s;
}

Mat symplectic_form(int n_modes) {
  Mat omega = Mat::Zero(2 * n_modes, 2 * n_modes);
  omega.topRightCorner(n_modes, n_modes) = Mat::Identity(n_modes, n_modes);
  omega.bottomLeftCorner(n_modes, n_modes) = -Mat::Identity(n_modes, n_modes);
  return omega;
}

double symplectic_defect(const Mat& S) {
  const int n = static_cast<int>(S.rows()) / 2;
  Mat omega = symplectic_form(n);
  return (S * omega * S.transpose() - omega).cwiseAbs().maxCoeff();
}

SymplecticMatrix symplectic_squeezer(double r, double phi, int mode, int n_modes) {
  check_mode(mode, n_modes);
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  // R(phi/2) diag(e^-r, e^r) R(-phi/2) on the mode's (q, p) pair.
  SymplecticMatrix out{Mat::Identity(2 * n_modes, 2 * n_modes), n_modes};
  out.S(mode, mode) = ch - c * sh;
  out.S(mode, n_modes + mode) = s * sh;
  out.S(n_modes + mode, mode) = s * sh;
  out.S(n_modes + mode, n_modes + mode) = ch + c * sh;
  return out;
}

SymplecticMatrix symplectic_beamsplitter(double theta, double phi, int i, int j, int n_modes) {
  check_mode(i, n_modes);
  check_mode(j, n_modes);
  if (i == j) {
    throw std::invalid_argument("beamsplitter modes must differ");
  }
  CMat u = CMat::Identity(n_modes, n_modes);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const std::complex<double> eip(std::cos(phi), std::sin(phi));
  u(i, i) = c;
  u(i, j) = -s / eip;
  u(j, i) = s * eip;
  u(j, j) = c;
  return symplectic_from_unitary(u);
}

SymplecticMatrix symplectic_phase(double lambda, int mode, int n_modes) {
  check_mode(mode, n_modes);
  CMat u = CMat::Identity(n_modes, n_modes);
  u(mode, mode) = std::complex<double>(std::cos(lambda), std::sin(lambda));
  return symplectic_from_unitary(u);
}

SymplecticMatrix symplectic_from_unitary(const CMat& U) {
  const int n = static_cast<int>(U.rows());
  SymplecticMatrix out{Mat(2 * n, 2 * n), n};
  const Mat x = U.real();
  const Mat y = U.imag();
  out.S.topLeftCorner(n, n) = x;
  out.S.topRightCorner(n, n) = -y;
  out.S.bottomLeftCorner(n, n) = y;
  out.S.bottomRightCorner(n, n) = x;
  return out;
}

CMat unitary_from_orthosymplectic(const Mat& S, double tol) {
  const int n = static_cast<int>(S.rows()) / 2;
  const Mat x = S.topLeftCorner(n, n);
  const Mat y = S.bottomLeftCorner(n, n);
  const double block_defect =
      std::max((S.bottomRightCorner(n, n) - x).cwiseAbs().maxCoeff(),
               (S.topRightCorner(n, n) + y).cwiseAbs().maxCoeff());
  if (block_defect > tol || symplectic_defect(S) > tol) {
    throw std::invalid_argument("matrix is not orthogonal symplectic");
  }
  return x.cast<std::complex<double>>() + std::complex<double>(0, 1) * y.cast<std::complex<double>>();
}

CovarianceState apply_symplectic(const CovarianceState& state, const SymplecticMatrix& S) {
  if (S.S.rows() != state.V.rows()) {
    throw std::invalid_argument("symplectic dimension does not match state");
  }
  CovarianceState out = state;
  out.V = S.S * state.V * S.S.transpose();
  out.xi = S.S * state.xi;
  return out;
}

CovarianceState apply_loss_cov(const CovarianceState& state, double eta, int mode) {
  if (eta < 0.0 || eta > 1.0) {
    throw std::invalid_argument("transmissivity must lie in [0, 1]");
  }
  check_mode(mode, state.modes);
  const int n = state.modes;
  Vec g = Vec::Ones(2 * n);
  g(mode) = std::sqrt(eta);
  g(n + mode) = std::sqrt(eta);
  CovarianceState out = state;
  out.V = g.asDiagonal() * state.V * g.asDiagonal();
  out.V(mode, mode) += 1.0 - eta;
  out.V(n + mode, n + mode) += 1.0 - eta;
  out.xi = g.asDiagonal() * state.xi;
  return out;
}

CovarianceState apply_displacement_cov(const CovarianceState& state, std::complex<double> alpha,
                                       int mode) {
  check_mode(mode, state.modes);
  CovarianceState out = state;
  out.xi(mode) += 2.0 * alpha.real();
  out.xi(state.modes + mode) += 2.0 * alpha.imag();
  return out;
}

double wigner_eval(const CovarianceState& state, const Vec& x) {
  if (x.size() != state.V.rows()) {
    throw std::invalid_argument("evaluation point has wrong dimension");
  }
  Eigen::LDLT<Mat> ldlt(state.V);
  const double det = state.V.determinant();
  if (ldlt.info() != Eigen::Success || !(det > 0.0) || !std::isfinite(det)) {
    throw std::domain_error("covariance matrix is singular");
  }
  const Vec d = x - state.xi;
  const double quad = d.dot(ldlt.solve(d));
  const double norm =
      std::pow(2.0 * std::numbers::pi, state.modes) * std::sqrt(det);
  return std::exp(-0.5 * quad) / norm;
}

double uncertainty_min_eigenvalue(const CovarianceState& state) {
  const int dim = static_cast<int>(state.V.rows());
  CMat h = state.V.cast<std::complex<double>>();
  h += std::complex<double>(0, 1) * symplectic_form(state.modes).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  (void)dim;
  return es.eigenvalues().minCoeff();
}

bool is_pure_covariance(const CovarianceState& state, double tol) {
  Mat omega = symplectic_form(state.modes);
  const double defect = (state.V * omega * state.V.transpose() - omega).cwiseAbs().maxCoeff();
  return defect < tol;
}

}  // namespace hsim
