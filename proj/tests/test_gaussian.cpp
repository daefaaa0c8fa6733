#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "hsim/gaussian.hpp"

using namespace hsim;

TEST_CASE("squeezer symplectic basics") {
  auto s0 = symplectic_squeezer(0.0, 1.3, 0, 1);
  CHECK((s0.S - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() == doctest::Approx(0.0));

  auto s = symplectic_squeezer(0.5, 0.0, 0, 1);
  CHECK(s.S(0, 0) == doctest::Approx(std::exp(-0.5)));
  CHECK(s.S(1, 1) == doctest::Approx(std::exp(0.5)));
  CHECK(s.S(0, 1) == doctest::Approx(0.0));

  auto sp = symplectic_squeezer(1.2, 0.7, 0, 1);
  CHECK(symplectic_defect(sp.S) < 1e-12);

  CHECK_THROWS(symplectic_squeezer(0.1, 0.0, 3, 2));
}

TEST_CASE("beamsplitter symplectic basics") {
  auto id = symplectic_beamsplitter(0.0, 0.4, 0, 1, 2);
  CHECK((id.S - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-15);

  auto half = symplectic_beamsplitter(std::numbers::pi / 4, 0.0, 0, 1, 2);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(half.S(0, 0) == doctest::Approx(inv_sqrt2));
  CHECK(half.S(0, 1) == doctest::Approx(-inv_sqrt2));
  CHECK(half.S(1, 0) == doctest::Approx(inv_sqrt2));
  CHECK(half.S(1, 1) == doctest::Approx(inv_sqrt2));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    std::uniform_real_distribution<double> a(0.0, 6.28);
    auto bs = symplectic_beamsplitter(a(rng), a(rng), 0, 1, 3);
    CHECK(symplectic_defect(bs.S) < 1e-12);
  }
  CHECK_THROWS(symplectic_beamsplitter(0.3, 0.0, 1, 1, 2));
}

TEST_CASE("apply_symplectic basics and composition") {
  auto vac = CovarianceState::vacuum(1);
  auto s = symplectic_squeezer(0.5, 0.0, 0, 1);
  auto squeezed = apply_symplectic(vac, s);
  CHECK(squeezed.V(0, 0) == doctest::Approx(std::exp(-1.0)));
  CHECK(squeezed.V(1, 1) == doctest::Approx(std::exp(1.0)));

  std::mt19937_64 rng(3);
  Mat s1 = testing::random_symplectic_product(rng, 2, 4);
  Mat s2 = testing::random_symplectic_product(rng, 2, 4);
  auto v = CovarianceState::vacuum(2);
  auto via_two = apply_symplectic(apply_symplectic(v, {s1, 2}), {s2, 2});
  auto via_one = apply_symplectic(v, {Mat(s2 * s1), 2});
  CHECK((via_two.V - via_one.V).cwiseAbs().maxCoeff() < 1e-12);

  CHECK_THROWS(apply_symplectic(v, s));
}

TEST_CASE("covariance loss channel") {
  std::mt19937_64 rng(11);
  auto state = apply_symplectic(CovarianceState::vacuum(2),
                                {testing::random_symplectic_product(rng, 2, 6), 2});

  SUBCASE("eta = 1 is the identity") {
    auto out = apply_loss_cov(state, 1.0, 0);
    CHECK((out.V - state.V).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("eta = 0 resets the mode to vacuum") {
    auto out = apply_loss_cov(state, 0.0, 1);
    CHECK(out.V(1, 1) == doctest::Approx(1.0));
    CHECK(out.V(3, 3) == doctest::Approx(1.0));
    CHECK(out.V(1, 0) == doctest::Approx(0.0));
    CHECK(out.xi(1) == doctest::Approx(0.0));
  }
  SUBCASE("squeezed vacuum variances") {
    const double r = 0.7, eta = 0.6;
    auto sq = apply_symplectic(CovarianceState::vacuum(1), symplectic_squeezer(r, 0.0, 0, 1));
    auto out = apply_loss_cov(sq, eta, 0);
    CHECK(out.V(0, 0) == doctest::Approx(eta * std::exp(-2 * r) + (1 - eta)));
    CHECK(out.V(1, 1) == doctest::Approx(eta * std::exp(2 * r) + (1 - eta)));
  }
  SUBCASE("loss composes multiplicatively") {
    auto a = apply_loss_cov(apply_loss_cov(state, 0.9, 0), 0.8, 0);
    auto b = apply_loss_cov(state, 0.72, 0);
    CHECK((a.V - b.V).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((a.xi - b.xi).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("uncertainty relation preserved") {
    auto out = apply_loss_cov(state, 0.35, 0);
    CHECK(uncertainty_min_eigenvalue(out) > -1e-10);
  }
  CHECK_THROWS(apply_loss_cov(state, 1.2, 0));
}

TEST_CASE("wigner function") {
  SUBCASE("vacuum at the origin") {
    auto vac = CovarianceState::vacuum(1);
    CHECK(wigner_eval(vac, Vec::Zero(2)) ==
          doctest::Approx(1.0 / (2 * std::numbers::pi)));
    auto vac2 = CovarianceState::vacuum(2);
    CHECK(wigner_eval(vac2, Vec::Zero(4)) ==
          doctest::Approx(std::pow(2 * std::numbers::pi, -2)));
  }
  SUBCASE("maximum sits at the displacement") {
    auto state = apply_displacement_cov(CovarianceState::vacuum(1), Complex(0.7, -0.3), 0);
    Vec at_xi = state.xi;
    const double peak = wigner_eval(state, at_xi);
    std::mt19937_64 rng(5);
    std::normal_distribution<double> step(0.0, 0.5);
    for (int i = 0; i < 50; ++i) {
      Vec x = at_xi;
      x(0) += step(rng);
      x(1) += step(rng);
      CHECK(wigner_eval(state, x) <= peak + 1e-15);
    }
  }
  SUBCASE("grid quadrature of a squeezed vacuum integrates to one") {
    auto sq = apply_symplectic(CovarianceState::vacuum(1), symplectic_squeezer(0.3, 0.9, 0, 1));
    const double h = 0.05;
    double acc = 0.0;
    Vec x(2);
    for (double q = -8.0; q <= 8.0; q += h) {
      for (double p = -8.0; p <= 8.0; p += h) {
        x << q, p;
        acc += wigner_eval(sq, x);
      }
    }
    acc *= h * h;
    CHECK(acc == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("unitary round trip through orthogonal symplectics") {
  std::mt19937_64 rng(17);
  CMat u = testing::random_unitary(rng, 3);
  auto s = symplectic_from_unitary(u);
  CHECK(symplectic_defect(s.S) < 1e-12);
  CHECK((s.S * s.S.transpose() - Mat::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-12);
  CMat back = unitary_from_orthosymplectic(s.S);
  CHECK((back - u).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("all constructors satisfy the symplectic identity") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    Mat s = testing::random_symplectic_product(rng, 3, 6);
    CHECK(symplectic_defect(s) < 1e-10);
    auto state = apply_symplectic(CovarianceState::vacuum(3), {s, 3});
    CHECK(uncertainty_min_eigenvalue(state) > -1e-10);
  }
}
