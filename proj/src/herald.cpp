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

#include "hsim/herald.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hsim/gates.hpp"

namespace hsim {

namespace {

void check_measured(const FockTensor& psi, const std::vector<int>& measured,
                    const Pattern& pattern) {
  if (measured.size() != pattern.counts.size()) {
    throw std::invalid_argument("pattern length does not match measured mode count");
  }
  std::vector<int> seen;
  for (std::size_t i = 0; i < measured.size(); ++i) {
    const int m = measured[i];
    if (m < 0 || m >= psi.modes) {
      throw std::out_of_range("measured mode out of range");
    }
    if (std::find(seen.begin(), seen.end(), m) != seen.end()) {
      throw std::invalid_argument("measured modes must be distinct");
    }
    seen.push_back(m);
    if (pattern.counts[i] < 0 || pattern.counts[i] >= psi.cutoffs[m]) {
      throw std::out_of_range("pattern count exceeds cutoff");
    }
  }
}

// Slices several modes at fixed occupations; mode indices refer to `psi`.
FockTensor slice_modes(const FockTensor& psi, const std::vector<int>& measured,
                       const std::vector<int>& counts) {
  std::vector<std::size_t> order(measured.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return measured[a] > measured[b]; });
  FockTensor cur = psi;
  for (std::size_t i : order) {
    cur = cur.slice(measured[i], counts[i]);
  }
  return cur;
}

}  // namespace

int Pattern::total() const {
  int t = 0;
  for (int c : counts) {
    t += c;
  }
  return t;
}

DensityBlock DensityBlock::from_pure(const FockTensor& psi) {
  DensityBlock d;
  d.cutoffs = psi.cutoffs;
  const Eigen::Map<const CVec> v(psi.amps.data(), static_cast<Eigen::Index>(psi.size()));
  d.rho = v * v.adjoint();
  return d;
}

double DensityBlock::trace() const { return rho.trace().real(); }

double DensityBlock::hermiticity_defect() const {
  return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

double DensityBlock::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<CMat> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void DensityBlock::normalize() {
  const double t = trace();
  if (t <= 0.0) {
    throw std::domain_error("cannot normalize a zero-trace density");
  }
  rho /= t;
}

HeraldResult herald(const FockTensor& psi, const std::vector<int>& measured,
                    const Pattern& pattern) {
  check_measured(psi, measured, pattern);
  HeraldResult result;
  result.conditional = slice_modes(psi, measured, pattern.counts);
  result.probability = result.conditional.norm_sq();
  if (result.probability > 0.0) {
    result.conditional.scale(Complex(1.0 / std::sqrt(result.probability), 0));
  } else {
    result.zero = true;
  }
  return result;
}

double loss_weight(int n_detected, int k_lost, double eta) {
  // C(n+k, k) eta^n (1-eta)^k, computed in log space for stability.
  if (eta >= 1.0) {
    return k_lost == 0 ? 1.0 : 0.0;
  }
  double log_binom = 0.0;
  for (int i = 1; i <= k_lost; ++i) {
    log_binom += std::log(static_cast<double>(n_detected + i)) - std::log(static_cast<double>(i));
  }
  double log_eta_part = n_detected > 0 ? n_detected * std::log(eta) : 0.0;
  if (eta <= 0.0 && n_detected > 0) {
    return 0.0;
  }
  return std::exp(log_binom + log_eta_part + k_lost * std::log1p(-eta));
}

DensityBlock apply_loss_fock(const DensityBlock& rho_in, double eta, int mode) {
  if (eta < 0.0 || eta > 1.0) {
    throw std::invalid_argument("transmissivity must lie in [0, 1]");
  }
  if (mode < 0 || mode >= static_cast<int>(rho_in.cutoffs.size())) {
    throw std::out_of_range("mode index out of range");
  }
  const int c = rho_in.cutoffs[mode];
  std::size_t inner = 1;
  for (std::size_t k = mode + 1; k < rho_in.cutoffs.size(); ++k) {
    inner *= static_cast<std::size_t>(rho_in.cutoffs[k]);
  }
  const std::size_t dim = static_cast<std::size_t>(rho_in.rho.rows());
  const std::size_t outer = dim / (static_cast<std::size_t>(c) * inner);

  // rho' = sum_k (A_k (x) I) rho (A_k (x) I)^dag over the flattened indices,
  // with A_k(n-k, n) = sqrt(C(n,k) eta^{n-k} (1-eta)^k).
  DensityBlock out;
  out.cutoffs = rho_in.cutoffs;
  out.rho = CMat::Zero(dim, dim);
  for (int k = 0; k < c; ++k) {
    CMat tmp = CMat::Zero(dim, dim);
    for (std::size_t o = 0; o < outer; ++o) {
      for (int n_out = 0; n_out + k < c; ++n_out) {
        const double w = std::sqrt(loss_weight(n_out, k, eta));
        if (w == 0.0) {
          continue;
        }
        for (std::size_t i = 0; i < inner; ++i) {
          const std::size_t row_out = (o * c + static_cast<std::size_t>(n_out)) * inner + i;
          const std::size_t row_src = (o * c + static_cast<std::size_t>(n_out + k)) * inner + i;
          tmp.row(static_cast<Eigen::Index>(row_out)) =
              w * rho_in.rho.row(static_cast<Eigen::Index>(row_src));
        }
      }
    }
    for (std::size_t o = 0; o < outer; ++o) {
      for (int n_out = 0; n_out + k < c; ++n_out) {
        const double w = std::sqrt(loss_weight(n_out, k, eta));
        if (w == 0.0) {
          continue;
        }
        for (std::size_t i = 0; i < inner; ++i) {
          const std::size_t col_out = (o * c + static_cast<std::size_t>(n_out)) * inner + i;
          const std::size_t col_src = (o * c + static_cast<std::size_t>(n_out + k)) * inner + i;
          out.rho.col(static_cast<Eigen::Index>(col_out)) +=
              w * tmp.col(static_cast<Eigen::Index>(col_src));
        }
      }
    }
  }
  return out;
}

DensityBlock apply_loss_fock(const FockTensor& psi_single_mode, double eta) {
  if (psi_single_mode.modes != 1) {
    throw std::invalid_argument("pure-state loss overload expects a single-mode state");
  }
  return apply_loss_fock(DensityBlock::from_pure(psi_single_mode), eta, 0);
}

LossyHeraldResult herald_lossy(const FockTensor& psi, const std::vector<int>& measured,
                               const Pattern& pattern, const std::vector<double>& eta_detect,
                               double eta_out) {
  check_measured(psi, measured, pattern);
  if (eta_detect.size() != measured.size()) {
    throw std::invalid_argument("eta_detect length does not match measured modes");
  }
  for (double eta : eta_detect) {
    if (eta < 0.0 || eta > 1.0) {
      throw std::invalid_argument("transmissivity must lie in [0, 1]");
    }
  }

  const std::size_t n_meas = measured.size();
  std::vector<int> k_max(n_meas);
  for (std::size_t i = 0; i < n_meas; ++i) {
    k_max[i] = eta_detect[i] >= 1.0
                   ? 0
                   : psi.cutoffs[measured[i]] - 1 - pattern.counts[i];
  }

  LossyHeraldResult result;
  bool first = true;
  std::vector<int> k(n_meas, 0);
  while (true) {
    double weight = 1.0;
    std::vector<int> counts(n_meas);
    for (std::size_t i = 0; i < n_meas; ++i) {
      counts[i] = pattern.counts[i] + k[i];
      weight *= loss_weight(pattern.counts[i], k[i], eta_detect[i]);
    }
    if (weight > 0.0) {
      FockTensor sliced = slice_modes(psi, measured, counts);
      const Eigen::Map<const CVec> v(sliced.amps.data(), static_cast<Eigen::Index>(sliced.size()));
      if (first) {
        result.rho_out.cutoffs = sliced.cutoffs;
        result.rho_out.rho = CMat::Zero(v.size(), v.size());
        first = false;
      }
      result.rho_out.rho += weight * (v * v.adjoint());
    }
    // odometer over lost-photon counts
    std::size_t pos = 0;
    while (pos < n_meas && ++k[pos] > k_max[pos]) {
      k[pos] = 0;
      ++pos;
    }
    if (pos == n_meas) {
      break;
    }
  }
  if (first) {
    result.zero = true;
    return result;
  }
  result.probability = result.rho_out.trace();
  if (result.probability <= 0.0) {
    result.zero = true;
    return result;
  }
  if (eta_out < 1.0) {
    for (int m = 0; m < static_cast<int>(result.rho_out.cutoffs.size()); ++m) {
      result.rho_out = apply_loss_fock(result.rho_out, eta_out, m);
    }
  }
  result.rho_out.normalize();
  return result;
}

double fidelity(const DensityBlock& rho, const FockTensor& target) {
  if (rho.cutoffs.size() != static_cast<std::size_t>(target.modes)) {
    throw std::invalid_argument("mode counts differ");
  }
  std::vector<int> common(rho.cutoffs.size());
  for (std::size_t k = 0; k < common.size(); ++k) {
    common[k] = std::max(rho.cutoffs[k], target.cutoffs[k]);
  }
  const FockTensor t = target.padded(common);
  // Components of the target beyond rho's cutoffs hit zero-padded entries
  // of rho, so restricting the target to rho's index space is exact.
  std::vector<int> idx(static_cast<int>(rho.cutoffs.size()), 0);
  CVec tv = CVec::Zero(rho.rho.rows());
  const std::size_t rdim = static_cast<std::size_t>(rho.rho.rows());
  for (std::size_t flat = 0; flat < rdim; ++flat) {
    tv(static_cast<Eigen::Index>(flat)) = t.amps[t.flat_index(idx)];
    for (int k = static_cast<int>(rho.cutoffs.size()) - 1; k >= 0; --k) {
      if (++idx[k] < rho.cutoffs[k]) {
        break;
      }
      idx[k] = 0;
    }
  }
  const Complex val = tv.adjoint() * rho.rho * tv;
  return val.real();
}

double fidelity(const FockTensor& psi, const FockTensor& target) {
  return std::norm(inner_product(target, psi));
}

std::map<Pattern, double> outcome_distribution(const FockTensor& psi,
                                               const std::vector<int>& measured, int n_max) {
  for (int m : measured) {
    if (m < 0 || m >= psi.modes) {
      throw std::out_of_range("measured mode out of range");
    }
  }
  std::map<Pattern, double> dist;
  std::vector<int> idx(psi.modes, 0);
  for (std::size_t flat = 0; flat < psi.size(); ++flat) {
    const double w = std::norm(psi.amps[flat]);
    if (w > 0.0) {
      bool in_range = true;
      Pattern p;
      p.counts.reserve(measured.size());
      for (int m : measured) {
        if (idx[m] > n_max) {
          in_range = false;
          break;
        }
        p.counts.push_back(idx[m]);
      }
      if (in_range) {
        dist[p] += w;
      }
    }
    for (int k = psi.modes - 1; k >= 0; --k) {
      if (++idx[k] < psi.cutoffs[k]) {
        break;
      }
      idx[k] = 0;
    }
  }
  return dist;
}

double wigner_fock(const DensityBlock& rho, double q, double p) {
  if (rho.cutoffs.size() != 1) {
    throw std::invalid_argument("wigner_fock expects a single-mode state");
  }
  const int c = rho.cutoffs[0];
  const Complex beta(0.5 * q, 0.5 * p);
  const int cw = c + static_cast<int>(std::ceil(std::norm(beta))) + 24;
  const CMat d = displacement_matrix(beta, cw);
  // tr(rho D Pi D^dag) / (2 pi)
  Complex acc(0, 0);
  for (int n = 0; n < c; ++n) {
    for (int m = 0; m < c; ++m) {
      Complex kernel(0, 0);
      for (int k = 0; k < cw; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        kernel += sign * d(n, k) * std::conj(d(m, k));
      }
      acc += rho.rho(m, n) * kernel;
    }
  }
  return acc.real() / (2.0 * std::numbers::pi);
}

double wigner_fock(const FockTensor& psi_single_mode, double q, double p) {
  return wigner_fock(DensityBlock::from_pure(psi_single_mode), q, p);
}

}  // namespace hsim
