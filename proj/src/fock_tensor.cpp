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

#include "hsim/fock_tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace hsim {

namespace {

std::size_t total_size(const std::vector<int>& cutoffs) {
  std::size_t n = 1;
  for (int c : cutoffs) {
    if (c < 1) {
      throw std::invalid_argument("cutoffs must be >= 1");
    }
    n *= static_cast<std::size_t>(c);
  }
  return n;
}

}  // namespace

FockTensor FockTensor::vacuum(const std::vector<int>& cutoffs) {
  FockTensor t;
  t.cutoffs = cutoffs;
  t.modes = static_cast<int>(cutoffs.size());
  t.amps.assign(total_size(cutoffs), Complex(0, 0));
  t.amps[0] = Complex(1, 0);
  return t;
}

FockTensor FockTensor::fock(const std::vector<int>& occupations, const std::vector<int>& cutoffs) {
  if (occupations.size() != cutoffs.size()) {
    throw std::invalid_argument("occupation list does not match mode count");
  }
  FockTensor t;
  t.cutoffs = cutoffs;
  t.modes = static_cast<int>(cutoffs.size());
  t.amps.assign(total_size(cutoffs), Complex(0, 0));
  t.amps[t.flat_index(occupations)] = Complex(1, 0);
  return t;
}

std::size_t FockTensor::stride(int mode) const {
  std::size_t s = 1;
  for (int k = modes - 1; k > mode; --k) {
    s *= static_cast<std::size_t>(cutoffs[k]);
  }
  return s;
}

std::size_t FockTensor::flat_index(const std::vector<int>& occupations) const {
  std::size_t idx = 0;
  for (int k = 0; k < modes; ++k) {
    if (occupations[k] < 0 || occupations[k] >= cutoffs[k]) {
      throw std::out_of_range("occupation exceeds cutoff");
    }
    idx = idx * static_cast<std::size_t>(cutoffs[k]) + static_cast<std::size_t>(occupations[k]);
  }
  return idx;
}

double FockTensor::norm_sq() const {
  double n = 0.0;
  for (const Complex& a : amps) {
    n += std::norm(a);
  }
  return n;
}

void FockTensor::normalize() {
  const double n = std::sqrt(norm_sq());
  if (n == 0.0) {
    throw std::domain_error("cannot normalize a zero state");
  }
  for (Complex& a : amps) {
    a /= n;
  }
}

void FockTensor::scale(Complex factor) {
  for (Complex& a : amps) {
    a *= factor;
  }
}

FockTensor FockTensor::slice(int mode, int n) const {
  if (mode < 0 || mode >= modes) {
    throw std::out_of_range("mode index out of range");
  }
  if (n < 0 || n >= cutoffs[mode]) {
    throw std::out_of_range("slice occupation exceeds cutoff");
  }
  FockTensor out;
  out.modes = modes - 1;
  out.cutoffs.reserve(out.modes);
  for (int k = 0; k < modes; ++k) {
    if (k != mode) {
      out.cutoffs.push_back(cutoffs[k]);
    }
  }
  if (out.modes == 0) {
    out.cutoffs = {1};
    out.modes = 1;
    out.amps = {amps[static_cast<std::size_t>(n) * stride(mode)]};
    return out;
  }
  out.amps.assign(total_size(out.cutoffs), Complex(0, 0));
  const std::size_t s = stride(mode);
  const std::size_t inner = s;
  const std::size_t c = static_cast<std::size_t>(cutoffs[mode]);
  const std::size_t outer = size() / (c * inner);
  std::size_t w = 0;
  for (std::size_t o = 0; o < outer; ++o) {
    const std::size_t base = o * c * inner + static_cast<std::size_t>(n) * inner;
    for (std::size_t i = 0; i < inner; ++i) {
      out.amps[w++] = amps[base + i];
    }
  }
  return out;
}

FockTensor FockTensor::padded(const std::vector<int>& new_cutoffs) const {
  if (static_cast<int>(new_cutoffs.size()) != modes) {
    throw std::invalid_argument("cutoff list does not match mode count");
  }
  for (int k = 0; k < modes; ++k) {
    if (new_cutoffs[k] < cutoffs[k]) {
      throw std::invalid_argument("padded() cannot shrink a tensor");
    }
  }
  FockTensor out;
  out.modes = modes;
  out.cutoffs = new_cutoffs;
  out.amps.assign(total_size(new_cutoffs), Complex(0, 0));
  std::vector<int> idx(modes, 0);
  for (std::size_t flat = 0; flat < size(); ++flat) {
    out.amps[out.flat_index(idx)] = amps[flat];
    for (int k = modes - 1; k >= 0; --k) {
      if (++idx[k] < cutoffs[k]) {
        break;
      }
      idx[k] = 0;
    }
  }
  return out;
}

Complex inner_product(const FockTensor& a, const FockTensor& b) {
  if (a.modes != b.modes) {
    throw std::invalid_argument("mode counts differ");
  }
  std::vector<int> common(a.modes);
  for (int k = 0; k < a.modes; ++k) {
    common[k] = std::max(a.cutoffs[k], b.cutoffs[k]);
  }
  const FockTensor pa = a.padded(common);
  const FockTensor pb = b.padded(common);
  Complex acc(0, 0);
  for (std::size_t i = 0; i < pa.size(); ++i) {
    acc += std::conj(pa.amps[i]) * pb.amps[i];
  }
  return acc;
}

}  // namespace hsim
