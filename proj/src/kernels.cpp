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

#include "hsim/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace hsim {

namespace {

constexpr std::size_t kParallelWorkThreshold = 1u << 15;

bool use_parallel(Exec exec, std::size_t work) {
  switch (exec) {
    case Exec::Serial:
      return false;
    case Exec::Parallel:
      return true;
    case Exec::Auto:
      return work >= kParallelWorkThreshold && omp_get_max_threads() > 1;
  }
  return false;
}

// One slice of the one-mode contraction: elements base, base+inner, ...
inline void one_mode_slice(Complex* amps, std::size_t base, std::size_t inner, int c,
                           const CMat& m, Complex* tmp) {
  for (int k = 0; k < c; ++k) {
    tmp[k] = amps[base + static_cast<std::size_t>(k) * inner];
  }
  for (int n = 0; n < c; ++n) {
    Complex acc(0, 0);
    for (int k = 0; k < c; ++k) {
      acc += m(n, k) * tmp[k];
    }
    amps[base + static_cast<std::size_t>(n) * inner] = acc;
  }
}

// Offsets of all amplitudes whose occupations on `skip_a` and `skip_b`
// (skip_b may be -1) are zero; the slice is swept by adding mode strides.
std::vector<std::size_t> rest_offsets(const FockTensor& psi, int skip_a, int skip_b) {
  std::vector<std::size_t> offsets;
  std::size_t count = 1;
  for (int k = 0; k < psi.modes; ++k) {
    if (k != skip_a && k != skip_b) {
      count *= static_cast<std::size_t>(psi.cutoffs[k]);
    }
  }
  offsets.reserve(count);
  std::vector<int> idx(psi.modes, 0);
  for (std::size_t r = 0; r < count; ++r) {
    std::size_t base = 0;
    for (int k = 0; k < psi.modes; ++k) {
      base += static_cast<std::size_t>(idx[k]) * psi.stride(k);
    }
    offsets.push_back(base);
    for (int k = psi.modes - 1; k >= 0; --k) {
      if (k == skip_a || k == skip_b) {
        continue;
      }
      if (++idx[k] < psi.cutoffs[k]) {
        break;
      }
      idx[k] = 0;
    }
  }
  return offsets;
}

inline void two_mode_slice(Complex* amps, std::size_t base, std::size_t si, std::size_t sj,
                           int ci, int cj, const std::vector<CMat>& blocks, Complex* plane) {
  for (int a = 0; a < ci; ++a) {
    for (int b = 0; b < cj; ++b) {
      plane[a * cj + b] = amps[base + static_cast<std::size_t>(a) * si +
                               static_cast<std::size_t>(b) * sj];
    }
  }
  for (int t = 0; t <= (ci - 1) + (cj - 1); ++t) {
    const CMat& blk = blocks[static_cast<std::size_t>(t)];
    const int lo = std::max(0, t - (cj - 1));
    const int hi = std::min(t, ci - 1);
    for (int mo = lo; mo <= hi; ++mo) {
      Complex acc(0, 0);
      for (int mi = lo; mi <= hi; ++mi) {
        acc += blk(mo, mi) * plane[mi * cj + (t - mi)];
      }
      amps[base + static_cast<std::size_t>(mo) * si + static_cast<std::size_t>(t - mo) * sj] = acc;
    }
  }
}

}  // namespace

void apply_one_mode_serial(FockTensor& psi, const CMat& m, int mode) {
  const int c = psi.cutoffs[mode];
  const std::size_t inner = psi.stride(mode);
  const std::size_t outer = psi.size() / (static_cast<std::size_t>(c) * inner);
  std::vector<Complex> tmp(static_cast<std::size_t>(c));
  for (std::size_t o = 0; o < outer; ++o) {
    const std::size_t block = o * static_cast<std::size_t>(c) * inner;
    for (std::size_t i = 0; i < inner; ++i) {
      one_mode_slice(psi.amps.data(), block + i, inner, c, m, tmp.data());
    }
  }
}

void apply_one_mode_parallel(FockTensor& psi, const CMat& m, int mode) {
  const int c = psi.cutoffs[mode];
  const std::size_t inner = psi.stride(mode);
  const std::size_t outer = psi.size() / (static_cast<std::size_t>(c) * inner);
  const std::size_t slices = outer * inner;
#pragma omp parallel
  {
    std::vector<Complex> tmp(static_cast<std::size_t>(c));
#pragma omp for schedule(static)
    for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(slices); ++s) {
      const std::size_t o = static_cast<std::size_t>(s) / inner;
      const std::size_t i = static_cast<std::size_t>(s) % inner;
      one_mode_slice(psi.amps.data(), o * static_cast<std::size_t>(c) * inner + i, inner, c, m,
                     tmp.data());
    }
  }
}

void apply_one_mode(FockTensor& psi, const CMat& m, int mode, Exec exec) {
  if (mode < 0 || mode >= psi.modes) {
    throw std::out_of_range("mode index out of range");
  }
  if (m.rows() != psi.cutoffs[mode] || m.cols() != psi.cutoffs[mode]) {
    throw std::invalid_argument("gate matrix does not match mode cutoff");
  }
  const std::size_t c = static_cast<std::size_t>(psi.cutoffs[mode]);
  if (use_parallel(exec, psi.size() * c)) {
    apply_one_mode_parallel(psi, m, mode);
  } else {
    apply_one_mode_serial(psi, m, mode);
  }
}

void apply_diagonal_serial(FockTensor& psi, const CVec& d, int mode) {
  const std::size_t c = static_cast<std::size_t>(psi.cutoffs[mode]);
  const std::size_t inner = psi.stride(mode);
  const std::size_t outer = psi.size() / (c * inner);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t n = 0; n < c; ++n) {
      Complex* p = psi.amps.data() + o * c * inner + n * inner;
      const Complex f = d(static_cast<Eigen::Index>(n));
      for (std::size_t i = 0; i < inner; ++i) {
        p[i] *= f;
      }
    }
  }
}

void apply_diagonal_parallel(FockTensor& psi, const CVec& d, int mode) {
  const std::size_t c = static_cast<std::size_t>(psi.cutoffs[mode]);
  const std::size_t inner = psi.stride(mode);
  const std::size_t total = psi.size();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(total); ++idx) {
    const std::size_t n = (static_cast<std::size_t>(idx) / inner) % c;
    psi.amps[static_cast<std::size_t>(idx)] *= d(static_cast<Eigen::Index>(n));
  }
}

void apply_diagonal(FockTensor& psi, const CVec& d, int mode, Exec exec) {
  if (mode < 0 || mode >= psi.modes) {
    throw std::out_of_range("mode index out of range");
  }
  if (d.size() != psi.cutoffs[mode]) {
    throw std::invalid_argument("diagonal does not match mode cutoff");
  }
  if (use_parallel(exec, psi.size())) {
    apply_diagonal_parallel(psi, d, mode);
  } else {
    apply_diagonal_serial(psi, d, mode);
  }
}

void apply_two_mode_blocks_serial(FockTensor& psi, const std::vector<CMat>& blocks, int mode_i,
                                  int mode_j) {
  const int ci = psi.cutoffs[mode_i];
  const int cj = psi.cutoffs[mode_j];
  const std::size_t si = psi.stride(mode_i);
  const std::size_t sj = psi.stride(mode_j);
  const std::vector<std::size_t> bases = rest_offsets(psi, mode_i, mode_j);
  std::vector<Complex> plane(static_cast<std::size_t>(ci) * static_cast<std::size_t>(cj));
  for (std::size_t base : bases) {
    two_mode_slice(psi.amps.data(), base, si, sj, ci, cj, blocks, plane.data());
  }
}

void apply_two_mode_blocks_parallel(FockTensor& psi, const std::vector<CMat>& blocks, int mode_i,
                                    int mode_j) {
  const int ci = psi.cutoffs[mode_i];
  const int cj = psi.cutoffs[mode_j];
  const std::size_t si = psi.stride(mode_i);
  const std::size_t sj = psi.stride(mode_j);
  const std::vector<std::size_t> bases = rest_offsets(psi, mode_i, mode_j);
#pragma omp parallel
  {
    std::vector<Complex> plane(static_cast<std::size_t>(ci) * static_cast<std::size_t>(cj));
#pragma omp for schedule(static)
    for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(bases.size()); ++r) {
      two_mode_slice(psi.amps.data(), bases[static_cast<std::size_t>(r)], si, sj, ci, cj, blocks,
                     plane.data());
    }
  }
}

void apply_two_mode_blocks(FockTensor& psi, const std::vector<CMat>& blocks, int mode_i,
                           int mode_j, Exec exec) {
  if (mode_i == mode_j) {
    throw std::invalid_argument("two-mode gate requires distinct modes");
  }
  if (mode_i < 0 || mode_i >= psi.modes || mode_j < 0 || mode_j >= psi.modes) {
    throw std::out_of_range("mode index out of range");
  }
  const int ci = psi.cutoffs[mode_i];
  const int cj = psi.cutoffs[mode_j];
  if (static_cast<int>(blocks.size()) < ci + cj - 1) {
    throw std::invalid_argument("block list does not cover the joint cutoff");
  }
  const std::size_t work =
      psi.size() * static_cast<std::size_t>(std::max(ci, cj));
  if (use_parallel(exec, work)) {
    apply_two_mode_blocks_parallel(psi, blocks, mode_i, mode_j);
  } else {
    apply_two_mode_blocks_serial(psi, blocks, mode_i, mode_j);
  }
}

}  // namespace hsim
