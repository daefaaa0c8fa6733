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

#ifndef HSIM_HERALD_HPP
#define HSIM_HERALD_HPP

#include <map>
#include <optional>
#include <vector>

#include "hsim/fock_tensor.hpp"
#include "hsim/kernels.hpp"

namespace hsim {

/// Photon counts observed on a set of measured modes.
struct Pattern {
  std::vector<int> counts;

  int total() const;
  bool operator==(const Pattern& other) const = default;
  bool operator<(const Pattern& other) const { return counts < other.counts; }
};

/// Mixed state on one mode (or a small joint block), stored as a Hermitian
/// matrix over the flattened Fock basis. trace <= 1: heralded outputs keep
/// their branch probability as the trace until normalized.
struct DensityBlock {
  CMat rho;
  std::vector<int> cutoffs;

  static DensityBlock from_pure(const FockTensor& psi);
  double trace() const;
  double hermiticity_defect() const;
  double min_eigenvalue() const;
  void normalize();
};

/// Projects `measured` modes onto the pattern. probability is the squared
/// norm of the slice; conditional is renormalized unless the probability
/// vanishes (zero == true, no division happens).
struct HeraldResult {
  FockTensor conditional;
  double probability = 0.0;
  bool zero = false;
};

HeraldResult herald(const FockTensor& psi, const std::vector<int>& measured,
                    const Pattern& pattern);

/// Pure-loss channel of transmissivity eta on axis `mode` of a density block.
DensityBlock apply_loss_fock(const DensityBlock& rho, double eta, int mode = 0);
/// Same channel on a pure single-mode state; the result is mixed.
DensityBlock apply_loss_fock(const FockTensor& psi_single_mode, double eta);

/// Binomial detection weight: probability that n photons survive and k are
/// lost in a transmissivity-eta channel, given n + k photons present.
double loss_weight(int n_detected, int k_lost, double eta);

/// Heralding with detector-side loss folded into the POVM (a detected n
/// means n surviving photons; lost photons are summed over up to the
/// cutoff) and loss applied to the conditional output state.
struct LossyHeraldResult {
  DensityBlock rho_out;
  double probability = 0.0;
  bool zero = false;
};

LossyHeraldResult herald_lossy(const FockTensor& psi, const std::vector<int>& measured,
                               const Pattern& pattern, const std::vector<double>& eta_detect,
                               double eta_out);

/// <target|rho|target> for mixed states, |<target|psi>|^2 for pure states;
/// cutoff mismatches are zero-padded.
double fidelity(const DensityBlock& rho, const FockTensor& target);
double fidelity(const FockTensor& psi, const FockTensor& target);

/// Probability of every outcome pattern with per-mode counts <= n_max,
/// accumulated in one pass over the tensor.
std::map<Pattern, double> outcome_distribution(const FockTensor& psi,
                                               const std::vector<int>& measured, int n_max);

/// Wigner function of a single-mode state at phase-space point (q, p),
/// hbar = 2 normalization (integrates to the trace over dq dp).
double wigner_fock(const DensityBlock& rho, double q, double p);
double wigner_fock(const FockTensor& psi_single_mode, double q, double p);

}  // namespace hsim

#endif
