// Copyright 2026 The qot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qot/linalg.hpp"
#include "qot/metrics.hpp"
#include "qot/states.hpp"

using qot::Cplx;
using qot::Matrix;
namespace states = qot::states;
namespace linalg = qot::linalg;

namespace {

Matrix pauli_z() {
  Matrix m(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

states::PureState plus_state() {
  const double inv = 1.0 / std::sqrt(2.0);
  return states::PureState({Cplx(inv), Cplx(inv)});
}

states::PureState minus_state() {
  const double inv = 1.0 / std::sqrt(2.0);
  return states::PureState({Cplx(inv), Cplx(-inv)});
}

}  // namespace

TEST_CASE("hilbert-schmidt sampling basics") {
  SUBCASE("deterministic per seed spec") {
    const auto a = states::random_density_hs(3, {42, 7});
    const auto b = states::random_density_hs(3, {42, 7});
    CHECK(qot::max_abs_diff(a.matrix(), b.matrix()) == 0.0);
    const auto c = states::random_density_hs(3, {42, 8});
    CHECK(qot::max_abs_diff(a.matrix(), c.matrix()) > 1e-3);
  }
  SUBCASE("draws pass the state invariants") {
    for (int d : {2, 3, 4}) {
      for (int i = 0; i < 10000; ++i) {
        const auto rho = states::random_density_hs(d, {1, std::uint64_t(i)});
        CHECK(std::abs(rho.matrix().trace().real() - 1.0) <= 1e-10);
      }
    }
  }
  SUBCASE("ensemble mean is the maximally mixed state") {
    const int n = 10000, d = 3;
    Matrix mean(d, d);
    double sumsq_00 = 0.0;
    for (int i = 0; i < n; ++i) {
      const auto rho = states::random_density_hs(d, {5, std::uint64_t(i)});
      mean += rho.matrix();
      const double p00 = rho.matrix()(0, 0).real();
      sumsq_00 += p00 * p00;
    }
    mean *= Cplx(1.0 / n, 0.0);
    const double m00 = mean(0, 0).real();
    const double var00 = sumsq_00 / n - m00 * m00;
    const double se = std::sqrt(var00 / n);
    for (int i = 0; i < d; ++i)
      CHECK(std::abs(mean(i, i).real() - 1.0 / d) <= 3.0 * se + 1e-12);
    CHECK(std::abs(mean(0, 1)) <= 3.0 * se + 1e-12);
  }
}

TEST_CASE("pure state sampling") {
  const auto psi = states::random_pure(4, {9, 3});
  double norm2 = 0.0;
  for (const auto& a : psi.amplitudes()) norm2 += std::norm(a);
  CHECK(std::sqrt(norm2) == doctest::Approx(1.0).epsilon(1e-15));

  const auto psi2 = states::random_pure(4, {9, 3});
  for (int i = 0; i < 4; ++i) CHECK(psi.amplitudes()[i] == psi2.amplitudes()[i]);

  const int n = 10000, d = 2;
  Matrix mean(d, d);
  double sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto p = states::random_pure(d, {6, std::uint64_t(i)});
    const Matrix proj = p.projector().matrix();
    mean += proj;
    sumsq += proj(0, 0).real() * proj(0, 0).real();
  }
  mean *= Cplx(1.0 / n, 0.0);
  const double m00 = mean(0, 0).real();
  const double se = std::sqrt((sumsq / n - m00 * m00) / n);
  CHECK(std::abs(m00 - 1.0 / d) <= 3.0 * se + 1e-12);
}

TEST_CASE("evolve") {
  const auto rho = states::random_density_hs(3, {21, 0});
  const Matrix h = linalg::jz_operator(3);

  SUBCASE("theta = 0 is the identity map") {
    const auto out = states::evolve(rho, h, 0.0);
    CHECK(qot::max_abs_diff(out.matrix(), rho.matrix()) <= 1e-14);
  }
  SUBCASE("the maximally mixed state is stationary") {
    Matrix mm = Matrix::identity(3) * (1.0 / 3.0);
    const auto out = states::evolve(states::DensityMatrix(mm), h, 0.7);
    CHECK(qot::max_abs_diff(out.matrix(), mm) <= 1e-12);
  }
  SUBCASE("pauli-z rotation takes |+> to |-> up to phase") {
    const auto out =
        states::evolve(plus_state().projector(), pauli_z(), std::numbers::pi / 2);
    const double fid =
        qot::metrics::uhlmann_fidelity(out, minus_state().projector());
    CHECK(fid == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("spectrum, trace and purity preserved") {
    const auto out = states::evolve(rho, h, 1.3);
    const auto ea = linalg::hermitian_eig(rho.matrix()).eigenvalues;
    const auto eb = linalg::hermitian_eig(out.matrix()).eigenvalues;
    for (std::size_t i = 0; i < ea.size(); ++i)
      CHECK(std::abs(ea[i] - eb[i]) <= 1e-9);
    CHECK(states::purity(out) == doctest::Approx(states::purity(rho)).epsilon(1e-9));
  }
  SUBCASE("dimension mismatch throws") {
    CHECK_THROWS_AS(states::evolve(rho, pauli_z(), 0.1), std::invalid_argument);
  }
}

TEST_CASE("expectation, variance, purity") {
  const auto zero = states::PureState::basis_state(2, 0).projector();
  CHECK(states::variance(zero, pauli_z()) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(states::expectation(zero, pauli_z()) == doctest::Approx(1.0));

  const auto plus = plus_state().projector();
  CHECK(states::variance(plus, pauli_z()) == doctest::Approx(1.0).epsilon(1e-12));

  SUBCASE("pure-state variance sum over a full generator set") {
    for (int d : {2, 3}) {
      const auto psi = states::random_pure(d, {33, std::uint64_t(d)});
      const auto proj = psi.projector();
      double acc = 0.0;
      for (const auto& g : linalg::su_generators(d))
        acc += states::variance(proj, g);
      CHECK(acc == doctest::Approx(2.0 * (d - 1)).epsilon(1e-10));
    }
  }
  SUBCASE("maximally mixed variance matches the moment formula") {
    const int d = 4;
    Matrix mm = Matrix::identity(d) * (1.0 / d);
    const states::DensityMatrix rho{mm};
    const Matrix h = linalg::jz_operator(d);
    const double tr_h = h.trace().real();
    const double tr_h2 = (h * h).trace().real();
    const double expect = tr_h2 / d - (tr_h / d) * (tr_h / d);
    CHECK(states::variance(rho, h) == doctest::Approx(expect).epsilon(1e-12));
  }
  CHECK(states::purity(plus) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigen decomposition of a state") {
  SUBCASE("pure input is a single term") {
    const auto psi = states::random_pure(3, {44, 0});
    const auto dec = states::eigen_decomposition_of_state(psi.projector());
    REQUIRE(dec.weights.size() == 1);
    CHECK(dec.weights[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::norm(dec.left[0].overlap(psi)) == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("maximally mixed qubit") {
    Matrix mm = Matrix::identity(2) * 0.5;
    const auto dec = states::eigen_decomposition_of_state(states::DensityMatrix(mm));
    REQUIRE(dec.weights.size() == 2);
    CHECK(dec.weights[0] == doctest::Approx(0.5));
    CHECK(dec.weights[1] == doctest::Approx(0.5));
  }
  SUBCASE("reconstruction") {
    const auto rho = states::random_density_hs(4, {45, 0});
    const auto dec = states::eigen_decomposition_of_state(rho);
    Matrix sum(4, 4);
    for (std::size_t k = 0; k < dec.weights.size(); ++k)
      sum += dec.weights[k] * dec.left[k].projector().matrix();
    CHECK(qot::max_abs_diff(sum, rho.matrix()) <= 1e-9);
  }
}

TEST_CASE("validation errors") {
  Matrix not_unit = Matrix::identity(2);
  CHECK_THROWS_AS(states::DensityMatrix{not_unit}, std::invalid_argument);

  Matrix neg(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(states::DensityMatrix{neg}, std::invalid_argument);

  CHECK_THROWS_AS(states::PureState({Cplx(1.0), Cplx(1.0)}), std::invalid_argument);

  const auto psi = states::random_pure(2, {50, 0});
  CHECK_THROWS_AS(
      states::make_pure_decomposition({0.5, 0.6}, {psi, psi},
                                      psi.projector().matrix()),
      std::invalid_argument);
}
