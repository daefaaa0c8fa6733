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

#include "hsim/clements.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace hsim {

namespace {

using Complex = std::complex<double>;
using Eigen::MatrixXcd;

struct TFactor {
  int mode;  // acts on (mode, mode+1)
  double theta;
  double phi;
};

// T(m; theta, phi) has the 2x2 block
//   [ e^{i phi} cos t   -sin t ]
//   [ e^{i phi} sin t    cos t ]
// on rows/columns (m, m+1).

// U <- U * T^dag, chosen so that U(row, m) becomes zero.
TFactor null_from_right(MatrixXcd& u, int row, int m) {
  const Complex a = u(row, m);
  const Complex b = u(row, m + 1);
  TFactor f{m, std::atan2(std::abs(a), std::abs(b)), std::arg(a) - std::arg(b)};
  const Complex eimp = std::polar(1.0, -f.phi);
  const double c = std::cos(f.theta);
  const double s = std::sin(f.theta);
  for (int r = 0; r < u.rows(); ++r) {
    const Complex um = u(r, m);
    const Complex un = u(r, m + 1);
    u(r, m) = eimp * c * um - s * un;
    u(r, m + 1) = eimp * s * um + c * un;
  }
  return f;
}

// U <- T * U, chosen so that U(row, col) becomes zero (uses rows row-1, row).
TFactor null_from_left(MatrixXcd& u, int row, int col) {
  const Complex a = u(row, col);
  const Complex b = u(row - 1, col);
  TFactor f{row - 1, std::atan2(std::abs(a), std::abs(b)),
            std::arg(-a) - std::arg(b)};
  const Complex eip = std::polar(1.0, f.phi);
  const double c = std::cos(f.theta);
  const double s = std::sin(f.theta);
  for (int k = 0; k < u.cols(); ++k) {
    const Complex um = u(row - 1, k);
    const Complex un = u(row, k);
    u(row - 1, k) = eip * c * um - s * un;
    u(row, k) = eip * s * um + c * un;
  }
  return f;
}

}  // namespace

double unitarity_defect(const MatrixXcd& u) {
  return (u.adjoint() * u - MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

MatrixXcd MeshPlan::reconstruct() const {
  MatrixXcd u = MatrixXcd::Identity(modes, modes);
  for (const MeshStep& step : steps) {
    MatrixXcd g = MatrixXcd::Identity(modes, modes);
    if (step.kind == MeshStep::Kind::Phase) {
      g(step.mode, step.mode) = std::polar(1.0, step.value);
    } else {
      const double c = std::cos(step.value);
      const double s = std::sin(step.value);
      g(step.mode, step.mode) = c;
      g(step.mode, step.mode + 1) = -s;
      g(step.mode + 1, step.mode) = s;
      g(step.mode + 1, step.mode + 1) = c;
    }
    u = g * u;  // later steps act on the left
  }
  return u;
}

MeshPlan clements_decompose(const MatrixXcd& u_in, double tol) {
  const int n = static_cast<int>(u_in.rows());
  if (u_in.cols() != n) {
    throw std::invalid_argument("interferometer matrix must be square");
  }
  if (unitarity_defect(u_in) > tol) {
    throw std::invalid_argument("interferometer matrix is not unitary");
  }

  MatrixXcd u = u_in;
  std::vector<TFactor> right;  // recorded as U <- U T^dag
  std::vector<TFactor> left;   // recorded as U <- T U

  for (int i = 1; i <= n - 1; ++i) {
    if (i % 2 == 1) {
      for (int j = 0; j <= i - 1; ++j) {
        right.push_back(null_from_right(u, n - 1 - j, i - 1 - j));
      }
    } else {
      for (int j = 1; j <= i; ++j) {
        left.push_back(null_from_left(u, n + j - i - 1, j - 1));
      }
    }
  }

  // Now (prod left) U_in (prod T^dag) = D, so
  // U_in = L_1^dag ... L_p^dag D T_q ... T_1 with T_1 acting first.
  MeshPlan plan;
  plan.modes = n;
  for (const TFactor& f : right) {
    // T(theta, phi) = BS(theta) after a phase phi on the first mode.
    plan.steps.push_back({MeshStep::Kind::Phase, f.mode, f.phi});
    plan.steps.push_back({MeshStep::Kind::Beamsplitter, f.mode, f.theta});
  }
  for (int k = 0; k < n; ++k) {
    plan.steps.push_back({MeshStep::Kind::Phase, k, std::arg(u(k, k))});
  }
  for (auto it = left.rbegin(); it != left.rend(); ++it) {
    // T^dag = phase(-phi) after BS(-theta).
    plan.steps.push_back({MeshStep::Kind::Beamsplitter, it->mode, -it->theta});
    plan.steps.push_back({MeshStep::Kind::Phase, it->mode, -it->phi});
  }
  return plan;
}

}  // namespace hsim
