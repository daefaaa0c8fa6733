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

#ifndef HSIM_TARGETS_HPP
#define HSIM_TARGETS_HPP

#include <string>

#include "hsim/fock_tensor.hpp"

namespace hsim {

enum class CatParity { Even, Odd };

/// Normalized squeezed cat state S(r) N(|alpha> +- |-alpha>), built at a
/// high internal cutoff and truncated down. Throws when more than 1e-4 of
/// the state lies above the requested cutoff.
FockTensor cat_state(Complex alpha, CatParity parity, double r, int cutoff);

/// Finite-energy GKP |0>: Gaussian-envelope superposition of q-squeezed
/// peaks at q = 2 n sqrt(pi) with peak width Delta and envelope width
/// 1/Delta. The decibel parameter fixes Delta^2 = 10^(-dB/10).
FockTensor gkp_delta(double delta_db, int cutoff);

/// Core state of the approximate GKP |0>: coefficients c_0..c_{n_max} and
/// squeeze r maximizing <0_Delta| S(r) sum_n c_n |n>. The returned state is
/// the bare core (squeezing factored out and reported separately).
struct GkpCore {
  FockTensor core;      // single mode, support within [0, n_max]
  double squeeze = 0.0; // r of the factored-out squeezer
  double overlap = 0.0; // achieved overlap with the finite-energy GKP state
  bool converged = true;
};

GkpCore gkp_core_state(int n_max = 4, double delta_db = 10.0, int cutoff = 40);

/// Parses "cat", "gkp-delta" or "gkp-core".
enum class TargetKind { Cat, GkpDelta, GkpCore };
TargetKind parse_target_kind(const std::string& name);

}  // namespace hsim

#endif
