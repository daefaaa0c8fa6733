// Shared helpers for the unit suites: seeded random gates, random unitaries,
// and reference constructions used as independent oracles.
#ifndef HSIM_TESTS_HELPERS_HPP
#define HSIM_TESTS_HELPERS_HPP

#include <complex>
#include <random>

#include "hsim/fock_tensor.hpp"
#include "hsim/gaussian.hpp"

namespace hsim::testing {

inline Mat random_symplectic_product(std::mt19937_64& rng, int modes, int gates,
                                     double r_scale = 0.8) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
  std::uniform_real_distribution<double> squeeze(-r_scale, r_scale);
  std::uniform_int_distribution<int> mode(0, modes - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  Mat s = Mat::Identity(2 * modes, 2 * modes);
  for (int g = 0; g < gates; ++g) {
    switch (kind(rng)) {
      case 0:
        s = symplectic_squeezer(squeeze(rng), angle(rng), mode(rng), modes).S * s;
        break;
      case 1: {
        int i = mode(rng);
        int j = mode(rng);
        if (i == j) {
          j = (i + 1) % modes;
        }
        s = symplectic_beamsplitter(angle(rng), angle(rng), i, j, modes).S * s;
        break;
      }
      default:
        s = symplectic_phase(angle(rng), mode(rng), modes).S * s;
        break;
    }
  }
  return s;
}

inline CMat random_unitary(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMat a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  Eigen::HouseholderQR<CMat> qr(a);
  CMat q = qr.householderQ();
  CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    q.col(k) *= r(k, k) / std::abs(r(k, k));
  }
  return q;
}

/// Two-mode squeezed vacuum with amplitudes tanh^n(r)/cosh(r) on |n,n>.
inline FockTensor tmsv_reference(double r, int cutoff) {
  FockTensor t = FockTensor::vacuum({cutoff, cutoff});
  const double lambda = std::tanh(r);
  double amp = 1.0 / std::cosh(r);
  for (int n = 0; n < cutoff; ++n) {
    t.amps[static_cast<std::size_t>(n) * cutoff + n] = amp;
    amp *= lambda;
  }
  return t;
}

}  // namespace hsim::testing

#endif
