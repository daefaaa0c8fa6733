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

#include "hsim/targets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hsim/gates.hpp"

namespace hsim {

namespace {

// Coherent-state amplitudes e^{-|a|^2/2} a^n / sqrt(n!).
CVec coherent_amplitudes(Complex alpha, int cutoff) {
  CVec v(cutoff);
  v(0) = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n < cutoff; ++n) {
    v(n) = v(n - 1) * alpha / std::sqrt(static_cast<double>(n));
  }
  return v;
}

FockTensor single_mode_from(const CVec& amps) {
  FockTensor t;
  t.modes = 1;
  t.cutoffs = {static_cast<int>(amps.size())};
  t.amps.assign(amps.data(), amps.data() + amps.size());
  return t;
}

FockTensor truncate_single_mode(const FockTensor& psi, int cutoff, double deficit_tol,
                                const char* what) {
  double kept = 0.0;
  for (int n = 0; n < cutoff; ++n) {
    kept += std::norm(psi.amps[static_cast<std::size_t>(n)]);
  }
  const double deficit = psi.norm_sq() - kept;
  if (deficit > deficit_tol) {
    throw std::domain_error(std::string(what) +
                            ": truncation deficit above tolerance, increase the cutoff");
  }
  FockTensor out;
  out.modes = 1;
  out.cutoffs = {cutoff};
  out.amps.assign(psi.amps.begin(), psi.amps.begin() + cutoff);
  out.normalize();
  return out;
}

}  // namespace

FockTensor cat_state(Complex alpha, CatParity parity, double r, int cutoff) {
  if (cutoff < 1) {
    throw std::invalid_argument("cutoff must be >= 1");
  }
  // Work at a cutoff large enough for the unsqueezed superposition, squeeze,
  // then truncate to the requested size.
  const double a2 = std::norm(alpha);
  int work = std::max(cutoff, static_cast<int>(std::ceil(2.5 * a2 + 12 * std::sqrt(a2 + 1.0))));
  work = std::max(work, cutoff + 8);
  const double sign = parity == CatParity::Even ? 1.0 : -1.0;
  CVec amps = coherent_amplitudes(alpha, work) + sign * coherent_amplitudes(-alpha, work);

  FockTensor psi = single_mode_from(amps);
  const double n2 = psi.norm_sq();
  if (n2 <= 0.0) {
    // alpha -> 0 limit: the even cat degenerates to vacuum, the odd cat to
    // a single photon.
    psi.amps.assign(psi.amps.size(), Complex(0, 0));
    psi.amps[parity == CatParity::Even ? 0 : 1] = Complex(1, 0);
  } else {
    psi.normalize();
  }
  // Exact parity: zero out the opposite sector contaminated by rounding.
  const int keep = parity == CatParity::Even ? 0 : 1;
  for (int n = 0; n < work; ++n) {
    if (n % 2 != keep) {
      psi.amps[static_cast<std::size_t>(n)] = Complex(0, 0);
    }
  }
  if (r != 0.0) {
    apply_squeezer_fock(psi, r, 0.0, 0);
  }
  return truncate_single_mode(psi, cutoff, 1e-4, "cat_state");
}

FockTensor gkp_delta(double delta_db, int cutoff) {
  if (!(delta_db > 0.0)) {
    throw std::invalid_argument("Delta_dB must be positive");
  }
  if (cutoff < 2) {
    throw std::invalid_argument("cutoff too small for a GKP state");
  }
  const double delta2 = std::pow(10.0, -delta_db / 10.0);
  const double delta = std::sqrt(delta2);
  // Each peak is a q-squeezed vacuum displaced to q = 2 s sqrt(pi); the
  // squeeze r makes the position wavefunction width Delta.
  const double r_peak = -std::log(delta);
  const double spacing = 2.0 * std::sqrt(std::numbers::pi);
  // Keep peaks down to envelope weight 1e-9; beyond that they change the
  // normalized amplitudes below double precision at the cutoffs used here.
  const int s_max = static_cast<int>(std::ceil(std::sqrt(2.0 * 20.7 / delta2) / spacing));
  const double mu_max = s_max * spacing;
  const int work = std::min(
      800, std::max(cutoff + 16,
                    static_cast<int>(std::ceil(0.5 * mu_max * mu_max + 8.0 * mu_max + 32.0))));
  FockTensor acc;
  acc.modes = 1;
  acc.cutoffs = {work};
  acc.amps.assign(static_cast<std::size_t>(work), Complex(0, 0));

  for (int s = -s_max; s <= s_max; ++s) {
    const double mu = spacing * s;
    const double weight = std::exp(-0.5 * delta2 * mu * mu);
    FockTensor peak = FockTensor::vacuum({work});
    apply_squeezer_fock(peak, r_peak, 0.0, 0);
    // Position-space units with a unit-variance vacuum pair: <q> = sqrt(2) Re alpha.
    apply_displacement_fock(peak, Complex(mu / std::sqrt(2.0), 0.0), 0);
    for (int n = 0; n < work; ++n) {
      acc.amps[static_cast<std::size_t>(n)] += weight * peak.amps[static_cast<std::size_t>(n)];
    }
  }
  acc.normalize();
  // The wavefunction is even in q; the odd Fock sector is rounding noise.
  for (int n = 1; n < work; n += 2) {
    acc.amps[static_cast<std::size_t>(n)] = Complex(0, 0);
  }
  return truncate_single_mode(acc, cutoff, 1e-6, "gkp_delta");
}

GkpCore gkp_core_state(int n_max, double delta_db, int cutoff) {
  if (n_max < 2) {
    throw std::invalid_argument("n_max must be >= 2");
  }
  const FockTensor grid = gkp_delta(delta_db, cutoff);

  // For fixed r the optimal coefficients are the leading components of
  // S(-r)|0_Delta>, so the search is one-dimensional in r.
  const auto overlap_at = [&](double r) {
    FockTensor probe = grid;
    apply_squeezer_fock(probe, -r, 0.0, 0);
    double s = 0.0;
    for (int n = 0; n <= n_max; ++n) {
      s += std::norm(probe.amps[static_cast<std::size_t>(n)]);
    }
    return std::sqrt(s);
  };

  // Deterministic golden-section search from a fixed bracket.
  double lo = -1.5, hi = 1.5;
  const double gold = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gold * (hi - lo);
  double x2 = lo + gold * (hi - lo);
  double f1 = overlap_at(x1);
  double f2 = overlap_at(x2);
  int iters = 0;
  while (hi - lo > 1e-10 && iters < 200) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gold * (hi - lo);
      f2 = overlap_at(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gold * (hi - lo);
      f1 = overlap_at(x1);
    }
    ++iters;
  }

  GkpCore out;
  out.squeeze = 0.5 * (lo + hi);
  out.converged = iters < 200;
  FockTensor probe = grid;
  apply_squeezer_fock(probe, -out.squeeze, 0.0, 0);
  CVec core = CVec::Zero(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    core(n) = probe.amps[static_cast<std::size_t>(n)];
  }
  out.overlap = core.norm();
  core /= core.norm();
  // Real gauge: the grid state is real, so the optimum is too.
  for (int n = 0; n <= n_max; ++n) {
    core(n) = Complex(core(n).real(), 0.0);
  }
  core /= core.norm();
  out.core = single_mode_from(core);
  return out;
}

TargetKind parse_target_kind(const std::string& name) {
  if (name == "cat") {
    return TargetKind::Cat;
  }
  if (name == "gkp-delta") {
    return TargetKind::GkpDelta;
  }
  if (name == "gkp-core") {
    return TargetKind::GkpCore;
  }
  throw std::invalid_argument("unknown target kind: " + name);
}

}  // namespace hsim
