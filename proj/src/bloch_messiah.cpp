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

#include "hsim/bloch_messiah.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hsim {

namespace {

using Complex = std::complex<double>;

// Joint diagonalization of commuting real symmetric matrices X, Y.
// Returns orthogonal O with O^T X O and O^T Y O both diagonal.
Mat joint_diagonalize(const Mat& x, const Mat& y, double tol) {
  Eigen::SelfAdjointEigenSolver<Mat> es(x);
  Mat o = es.eigenvectors();
  const Vec vals = es.eigenvalues();
  const int n = static_cast<int>(vals.size());
  int start = 0;
  while (start < n) {
    int end = start + 1;
    while (end < n && std::abs(vals(end) - vals(start)) < tol) {
      ++end;
    }
    const int len = end - start;
    if (len > 1) {
      Mat block = o.middleCols(start, len).transpose() * y * o.middleCols(start, len);
      Eigen::SelfAdjointEigenSolver<Mat> es2(block);
      o.middleCols(start, len) = o.middleCols(start, len) * es2.eigenvectors();
    }
    start = end;
  }
  return o;
}

// Takagi factor of a unitary symmetric matrix: W = M M^T with M unitary.
// Uses the fact that Re W and Im W commute for unitary symmetric W.
CMat takagi_unitary_symmetric(const CMat& w, double tol) {
  const Mat x = w.real();
  const Mat y = w.imag();
  Mat o = joint_diagonalize(x, y, tol);
  const int n = static_cast<int>(w.rows());
  CMat m(n, n);
  for (int k = 0; k < n; ++k) {
    const double dx = o.col(k).dot(x * o.col(k));
    const double dy = o.col(k).dot(y * o.col(k));
    const double lambda = std::atan2(dy, dx);
    m.col(k) = o.col(k) * std::polar(1.0, 0.5 * lambda);
  }
  return m;
}

}  // namespace

void symplectic_to_complex(const Mat& S, CMat& alpha, CMat& beta) {
  const int n = static_cast<int>(S.rows()) / 2;
  const Mat a = S.topLeftCorner(n, n);
  const Mat b = S.topRightCorner(n, n);
  const Mat c = S.bottomLeftCorner(n, n);
  const Mat d = S.bottomRightCorner(n, n);
  const Complex i(0, 1);
  alpha = 0.5 * ((a + d).cast<Complex>() + i * (c - b).cast<Complex>());
  beta = 0.5 * ((a - d).cast<Complex>() + i * (c + b).cast<Complex>());
}

CMat BlochMessiah::unitary_in() const { return unitary_from_orthosymplectic(passive_in.S); }

CMat BlochMessiah::unitary_out() const { return unitary_from_orthosymplectic(passive_out.S); }

Mat BlochMessiah::reconstruct() const {
  const int n = passive_in.modes;
  Vec z(2 * n);
  for (int k = 0; k < n; ++k) {
    z(k) = std::exp(-squeeze(k));
    z(n + k) = std::exp(squeeze(k));
  }
  return passive_out.S * z.asDiagonal() * passive_in.S;
}

BlochMessiah bloch_messiah(const Mat& S, double tol) {
  if (S.rows() != S.cols() || S.rows() % 2 != 0) {
    throw std::invalid_argument("symplectic matrix must be square with even dimension");
  }
  if (symplectic_defect(S) > tol) {
    throw std::invalid_argument("matrix is not symplectic within tolerance");
  }
  const int n = static_cast<int>(S.rows()) / 2;

  CMat alpha, beta;
  symplectic_to_complex(S, alpha, beta);

  // alpha = P cosh(r) Q^dag, beta = -P sinh(r) Q^T once the degenerate
  // singular subspaces are aligned.
  Eigen::JacobiSVD<CMat> svd(alpha, Eigen::ComputeFullU | Eigen::ComputeFullV);
  CMat p = svd.matrixU();
  CMat q = svd.matrixV();
  const Vec d = svd.singularValues();

  CMat t = -(p.adjoint() * beta * q.conjugate());

  const double group_tol = 1e-9;
  Vec r = Vec::Zero(n);
  int start = 0;
  while (start < n) {
    int end = start + 1;
    while (end < n && std::abs(d(end) - d(start)) < group_tol * std::max(1.0, d(start))) {
      ++end;
    }
    const int len = end - start;
    const double s = std::sqrt(std::max(0.0, d(start) * d(start) - 1.0));
    if (s > 1e-10) {
      if (len > 1) {
        CMat w = t.block(start, start, len, len) / s;
        w = 0.5 * (w + w.transpose().eval());
        CMat m = takagi_unitary_symmetric(w, 1e-12);
        p.middleCols(start, len) = p.middleCols(start, len) * m;
        q.middleCols(start, len) = q.middleCols(start, len) * m;
        CMat tg = -(p.middleCols(start, len).adjoint() * beta * q.middleCols(start, len).conjugate());
        for (int k = 0; k < len; ++k) {
          r(start + k) = std::asinh(tg(k, k).real());
        }
      } else {
        r(start) = std::asinh(t(start, start).real());
      }
    }
    start = end;
  }

  BlochMessiah out;
  out.passive_out = symplectic_from_unitary(p);
  out.passive_in = symplectic_from_unitary(q.adjoint());
  out.squeeze = r;
  return out;
}

}  // namespace hsim
