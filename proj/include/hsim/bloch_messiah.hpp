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

#ifndef HSIM_BLOCH_MESSIAH_HPP
#define HSIM_BLOCH_MESSIAH_HPP

#include "hsim/gaussian.hpp"

namespace hsim {

/// Factorization S = O_out * Z(r) * O_in with O_in, O_out orthogonal
/// symplectic and Z(r) = diag(e^-r_1..e^-r_N, e^r_1..e^r_N).
struct BlochMessiah {
  SymplecticMatrix passive_in;
  Vec squeeze;  // r_k >= 0, sorted descending
  SymplecticMatrix passive_out;

  /// N x N unitaries equivalent to the passive factors.
  CMat unitary_in() const;
  CMat unitary_out() const;

  Mat reconstruct() const;
};

/// Decomposes a symplectic matrix into passive / squeeze / passive layers.
/// Throws std::invalid_argument when S is not symplectic within `tol`.
BlochMessiah bloch_messiah(const Mat& S, double tol = 1e-8);

/// Complex single-mode-operator blocks of a symplectic matrix:
/// a_k -> sum_l alpha_kl a_l + beta_kl a_l^dag under Heisenberg evolution.
void symplectic_to_complex(const Mat& S, CMat& alpha, CMat& beta);

}  // namespace hsim

#endif
