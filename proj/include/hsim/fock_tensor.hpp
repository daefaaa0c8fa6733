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

#ifndef HSIM_FOCK_TENSOR_HPP
#define HSIM_FOCK_TENSOR_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace hsim {

using Complex = std::complex<double>;

/// Pure multimode state on a truncated Fock space. Amplitudes are stored
/// row-major; index n_k along axis k means occupation n_k in mode k.
struct FockTensor {
  std::vector<Complex> amps;
  std::vector<int> cutoffs;
  int modes = 0;

  static FockTensor vacuum(const std::vector<int>& cutoffs);
  /// Delta tensor at the given occupations; throws when any n_k >= c_k.
  static FockTensor fock(const std::vector<int>& occupations, const std::vector<int>& cutoffs);

  std::size_t size() const { return amps.size(); }
  /// Stride of axis `mode` in the flat amplitude array.
  std::size_t stride(int mode) const;
  std::size_t flat_index(const std::vector<int>& occupations) const;

  Complex& at(const std::vector<int>& occupations) { return amps[flat_index(occupations)]; }
  const Complex& at(const std::vector<int>& occupations) const {
    return amps[flat_index(occupations)];
  }

  double norm_sq() const;
  void normalize();
  void scale(Complex factor);

  /// Fixes mode `mode` at occupation n and returns the tensor on the
  /// remaining modes (unnormalized slice).
  FockTensor slice(int mode, int n) const;

  /// Zero-pads (or errors on shrink) to the given per-mode cutoffs.
  FockTensor padded(const std::vector<int>& new_cutoffs) const;
};

/// <a|b> with zero-padding to the larger cutoff on each mode.
Complex inner_product(const FockTensor& a, const FockTensor& b);

}  // namespace hsim

#endif
