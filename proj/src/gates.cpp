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

#include "hsim/gates.hpp"

#include <cmath>
#include <stdexcept>

#include "hsim/bloch_messiah.hpp"

namespace hsim {

CMat squeezer_matrix(double r, double phi, int cutoff) {
  CMat s = CMat::Zero(cutoff, cutoff);
  if (r == 0.0) {
    return CMat::Identity(cutoff, cutoff);
  }
  std::vector<double> sq(cutoff);
  for (int i = 0; i < cutoff; ++i) {
    sq[i] = std::sqrt(static_cast<double>(i));
  }
  // S(r, phi) squeezes the axis rotated by phi/2, i.e. the operator
  // exp(r/2 (e^{i phi} a^2 - e^{-i phi} a^dag^2)).
  const Complex pref = -std::polar(std::tanh(r), -phi);
  const double sech = 1.0 / std::cosh(r);
  s(0, 0) = std::sqrt(sech);
  for (int m = 2; m < cutoff; m += 2) {
    s(m, 0) = sq[m - 1] / sq[m] * pref * s(m - 2, 0);
  }
  for (int n = 1; n < cutoff; ++n) {
    for (int m = (n % 2); m < cutoff; m += 2) {
      Complex acc(0, 0);
      if (n >= 2) {
        acc += sq[n - 1] / sq[n] * std::conj(pref) * (-1.0) * s(m, n - 2);
      }
      if (m >= 1) {
        acc += sq[m] / sq[n] * sech * s(m - 1, n - 1);
      }
      s(m, n) = acc;
    }
  }
  return s;
}

CMat displacement_matrix(Complex alpha, int cutoff) {
  CMat d = CMat::Zero(cutoff, cutoff);
  std::vector<double> sq(cutoff + 1);
  for (int i = 0; i <= cutoff; ++i) {
    sq[i] = std::sqrt(static_cast<double>(i));
  }
  d(0, 0) = std::exp(-0.5 * std::norm(alpha));
  for (int m = 1; m < cutoff; ++m) {
    d(m, 0) = alpha / sq[m] * d(m - 1, 0);
  }
  for (int n = 1; n < cutoff; ++n) {
    for (int m = 0; m < cutoff; ++m) {
      Complex acc = -std::conj(alpha) * d(m, n - 1);
      if (m >= 1) {
        acc += sq[m] * d(m - 1, n - 1);
      }
      d(m, n) = acc / sq[n];
    }
  }
  return d;
}

CVec phase_diagonal(double lambda, int cutoff) {
  CVec d(cutoff);
  for (int n = 0; n < cutoff; ++n) {
    d(n) = std::polar(1.0, lambda * n);
  }
  return d;
}

std::vector<CMat> beamsplitter_blocks(double theta, double phi, int ci, int cj) {
  const int t_max = (ci - 1) + (cj - 1);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex eip = std::polar(1.0, phi);
  const Complex eim = std::polar(1.0, -phi);

  std::vector<CMat> blocks(static_cast<std::size_t>(t_max) + 1);
  blocks[0] = CMat::Ones(1, 1);
  // prev[m] holds the amplitudes of BS|m, T-1-m>.
  std::vector<CVec> prev(1, CVec::Ones(1));
  for (int t = 1; t <= t_max; ++t) {
    std::vector<CVec> cur(static_cast<std::size_t>(t) + 1, CVec::Zero(t + 1));
    for (int mo = 0; mo <= t; ++mo) {
      Complex acc(0, 0);
      if (mo >= 1) {
        acc += -eim * s * std::sqrt(static_cast<double>(mo)) * prev[0](mo - 1);
      }
      if (mo <= t - 1) {
        acc += c * std::sqrt(static_cast<double>(t - mo)) * prev[0](mo);
      }
      cur[0](mo) = acc / std::sqrt(static_cast<double>(t));
    }
    for (int m = 1; m <= t; ++m) {
      for (int mo = 0; mo <= t; ++mo) {
        Complex acc(0, 0);
        if (mo >= 1) {
          acc += c * std::sqrt(static_cast<double>(mo)) * prev[static_cast<std::size_t>(m - 1)](mo - 1);
        }
        if (mo <= t - 1) {
          acc += eip * s * std::sqrt(static_cast<double>(t - mo)) *
                 prev[static_cast<std::size_t>(m - 1)](mo);
        }
        cur[static_cast<std::size_t>(m)](mo) = acc / std::sqrt(static_cast<double>(m));
      }
    }
    blocks[static_cast<std::size_t>(t)] = CMat(t + 1, t + 1);
    for (int m = 0; m <= t; ++m) {
      blocks[static_cast<std::size_t>(t)].col(m) = cur[static_cast<std::size_t>(m)];
    }
    prev = std::move(cur);
  }
  return blocks;
}

void apply_squeezer_fock(FockTensor& psi, double r, double phi, int mode, Exec exec) {
  if (!std::isfinite(r)) {
    throw std::invalid_argument("squeeze magnitude must be finite");
  }
  apply_one_mode(psi, squeezer_matrix(r, phi, psi.cutoffs[mode]), mode, exec);
}

void apply_displacement_fock(FockTensor& psi, Complex alpha, int mode, Exec exec) {
  if (alpha == Complex(0, 0)) {
    return;
  }
  apply_one_mode(psi, displacement_matrix(alpha, psi.cutoffs[mode]), mode, exec);
}

void apply_phase_fock(FockTensor& psi, double lambda, int mode, Exec exec) {
  apply_diagonal(psi, phase_diagonal(lambda, psi.cutoffs[mode]), mode, exec);
}

void apply_beamsplitter_fock(FockTensor& psi, double theta, double phi, int mode_i, int mode_j,
                             Exec exec) {
  apply_two_mode_blocks(psi, beamsplitter_blocks(theta, phi, psi.cutoffs[mode_i], psi.cutoffs[mode_j]),
                        mode_i, mode_j, exec);
}

void apply_mesh(FockTensor& psi, const MeshPlan& plan, Exec exec) {
  if (plan.modes != psi.modes) {
    throw std::invalid_argument("mesh plan does not match mode count");
  }
  for (const MeshStep& step : plan.steps) {
    if (step.kind == MeshStep::Kind::Phase) {
      apply_phase_fock(psi, step.value, step.mode, exec);
    } else {
      apply_beamsplitter_fock(psi, step.value, 0.0, step.mode, step.mode + 1, exec);
    }
  }
}

void apply_interferometer(FockTensor& psi, const CMat& u, Exec exec) {
  if (u.rows() != psi.modes) {
    throw std::invalid_argument("interferometer dimension does not match state");
  }
  apply_mesh(psi, clements_decompose(u), exec);
}

FockTensor gaussian_to_fock(const CovarianceState& state, const std::vector<int>& cutoffs) {
  if (static_cast<int>(cutoffs.size()) != state.modes) {
    throw std::invalid_argument("cutoff list does not match mode count");
  }
  if (!is_pure_covariance(state, 1e-6)) {
    throw std::invalid_argument("covariance matrix is not a pure state");
  }
  // V = S S^T with S = V^{1/2} symmetric symplectic; the passive input
  // layer of its Bloch-Messiah factorization acts trivially on vacuum.
  Eigen::SelfAdjointEigenSolver<Mat> es(state.V);
  const Mat sqrt_v = es.eigenvectors() *
                     es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
                     es.eigenvectors().transpose();
  const BlochMessiah bm = bloch_messiah(sqrt_v, 1e-6);

  FockTensor psi = FockTensor::vacuum(cutoffs);
  for (int k = 0; k < state.modes; ++k) {
    if (std::abs(bm.squeeze(k)) > 1e-14) {
      apply_squeezer_fock(psi, bm.squeeze(k), 0.0, k);
    }
  }
  apply_interferometer(psi, bm.unitary_out());
  for (int k = 0; k < state.modes; ++k) {
    const Complex alpha(0.5 * state.xi(k), 0.5 * state.xi(state.modes + k));
    apply_displacement_fock(psi, alpha, k);
  }
  return psi;
}

}  // namespace hsim
