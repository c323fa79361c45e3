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

#include "qot/linalg.hpp"
#include "qot/metrics.hpp"
#include "qot/states.hpp"

using qot::Cplx;
using qot::Matrix;
namespace m = qot::metrics;
namespace states = qot::states;
namespace linalg = qot::linalg;
using m::BoundKind;
using m::Cone;
using m::Formulation;
using m::ObservableSet;
using states::DensityMatrix;
using states::PureState;

namespace {

Matrix pauli_z() {
  Matrix z(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  return z;
}

DensityMatrix maximally_mixed(int d) {
  Matrix mm = Matrix::identity(d) * (1.0 / d);
  return DensityMatrix(std::move(mm));
}

PureState plus_state() {
  const double inv = 1.0 / std::sqrt(2.0);
  return PureState({Cplx(inv), Cplx(inv)});
}

DensityMatrix rand_mixed(int d, std::uint64_t stream) {
  return states::random_density_hs(d, {314, stream});
}

PureState rand_pure(int d, std::uint64_t stream) {
  return states::random_pure(d, {271, stream});
}

}  // namespace

TEST_CASE("uhlmann fidelity") {
  const auto rho = rand_mixed(3, 0);
  CHECK(m::uhlmann_fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-9));

  const auto zero = PureState::basis_state(2, 0).projector();
  const auto one = PureState::basis_state(2, 1).projector();
  CHECK(m::uhlmann_fidelity(zero, one) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(m::uhlmann_fidelity(maximally_mixed(2), zero) ==
        doctest::Approx(0.5).epsilon(1e-10));

  const auto sigma = rand_mixed(3, 1);
  CHECK(m::uhlmann_fidelity(rho, sigma) ==
        doctest::Approx(m::uhlmann_fidelity(sigma, rho)).epsilon(1e-9));
}

TEST_CASE("superfidelity") {
  const auto psi = rand_pure(3, 0);
  const auto phi = rand_pure(3, 1);
  CHECK(m::superfidelity(psi.projector(), phi.projector()) ==
        doctest::Approx(std::norm(psi.overlap(phi))).epsilon(1e-10));

  CHECK(m::superfidelity(maximally_mixed(2), maximally_mixed(2)) ==
        doctest::Approx(1.0).epsilon(1e-12));

  for (int i = 0; i < 20; ++i) {
    const auto a = rand_mixed(2, 10 + 2 * i);
    const auto b = rand_mixed(2, 11 + 2 * i);
    CHECK(m::superfidelity(a, b) ==
          doctest::Approx(m::uhlmann_fidelity(a, b)).epsilon(1e-9));
  }
}

TEST_CASE("bures distance") {
  const auto rho = rand_mixed(2, 2);
  CHECK(m::bures_distance_sq(rho, rho) == doctest::Approx(0.0).epsilon(1e-9));
  const auto zero = PureState::basis_state(2, 0).projector();
  const auto one = PureState::basis_state(2, 1).projector();
  CHECK(m::bures_distance_sq(zero, one) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(m::bures_distance_sq(maximally_mixed(2), zero) ==
        doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("quantum fisher information and skew information") {
  const auto plus = plus_state().projector();
  CHECK(m::qfi(plus, pauli_z()) == doctest::Approx(4.0).epsilon(1e-10));
  CHECK(m::qfi(plus, pauli_z()) ==
        doctest::Approx(4.0 * states::variance(plus, pauli_z())).epsilon(1e-10));
  CHECK(m::qfi(maximally_mixed(2), pauli_z()) ==
        doctest::Approx(0.0).epsilon(1e-12));

  CHECK(m::skew_information(plus, pauli_z()) ==
        doctest::Approx(states::variance(plus, pauli_z())).epsilon(1e-10));
  CHECK(m::skew_information(maximally_mixed(2), pauli_z()) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(m::skew_information(plus, pauli_z()) == doctest::Approx(1.0).epsilon(1e-10));

  for (int i = 0; i < 25; ++i) {
    const auto rho = rand_mixed(3, 40 + i);
    const Matrix h = linalg::jz_operator(3);
    const double skew = m::skew_information(rho, h);
    CHECK(skew >= -1e-12);
    CHECK(0.25 * m::qfi(rho, h) >= skew - 1e-10);
  }
}

TEST_CASE("delta and euclid distances") {
  const auto zero = PureState::basis_state(2, 0).projector();
  const auto one = PureState::basis_state(2, 1).projector();
  const auto zset = ObservableSet::single(pauli_z());
  const auto su2 = ObservableSet::su(2);

  CHECK(m::delta_sq(zero, one, zset) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(m::delta_sq(zero, one, su2) == doctest::Approx(4.0).epsilon(1e-12));
  const auto rho = rand_mixed(2, 3);
  double var_sum = 0.0;
  for (const auto& h : su2.ops()) var_sum += states::variance(rho, h);
  CHECK(m::delta_sq(rho, rho, su2) == doctest::Approx(var_sum).epsilon(1e-12));

  CHECK(m::euclid_sq(maximally_mixed(2), zero, zset) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(m::euclid_sq(rho, rho, su2) == doctest::Approx(0.0).epsilon(1e-12));

  for (int i = 0; i < 10; ++i) {
    const auto psi = rand_pure(3, 60 + 2 * i);
    const auto phi = rand_pure(3, 61 + 2 * i);
    const double overlap2 = std::norm(psi.overlap(phi));
    CHECK(m::euclid_sq(psi.projector(), phi.projector(), ObservableSet::su(3)) ==
          doctest::Approx(2.0 * (1.0 - overlap2)).epsilon(1e-10));
  }
}

TEST_CASE("transport distance: fixed example and closed-form cross-checks") {
  const auto zset = ObservableSet::single(pauli_z());

  SUBCASE("maximally mixed vs |0><0| with the z observable") {
    const auto rep = m::dpt_distance_sq(maximally_mixed(2),
                                        PureState::basis_state(2, 0).projector(),
                                        zset, Formulation::Dpt, Cone::Ppt);
    CHECK(rep.value == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(rep.bound_kind == BoundKind::Exact);  // d = 2
    CHECK(rep.diag.status == qot::sdp::SolveStatus::Converged);
  }
  SUBCASE("pure pairs collapse to the delta formula") {
    const auto psi = rand_pure(2, 70).projector();
    const auto phi = rand_pure(2, 71).projector();
    const auto su2 = ObservableSet::su(2);
    const double expect = m::delta_sq(psi, phi, su2);
    for (auto form : {Formulation::Dpt, Formulation::Gmpc})
      for (auto cone : {Cone::All, Cone::Ppt}) {
        const auto rep = m::dpt_distance_sq(psi, phi, su2, form, cone);
        CHECK(rep.value == doctest::Approx(expect).epsilon(1e-5));
      }
  }
  SUBCASE("self-distance over all couplings is the skew information sum") {
    const auto rho = rand_mixed(2, 72);
    const auto rep =
        m::dpt_distance_sq(rho, rho, zset, Formulation::Dpt, Cone::All);
    CHECK(rep.value ==
          doctest::Approx(m::skew_information(rho, pauli_z())).epsilon(1e-5));
  }
}

TEST_CASE("self distance") {
  const auto rho = rand_mixed(2, 80);
  const auto rho3 = rand_mixed(3, 81);

  SUBCASE("closed forms") {
    const auto su2_rep = m::self_distance_sq(rho, ObservableSet::su(2), Cone::Ppt);
    CHECK(su2_rep.value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(su2_rep.bound_kind == BoundKind::Exact);
    const auto su3_rep = m::self_distance_sq(rho3, ObservableSet::su(3), Cone::Ppt);
    CHECK(su3_rep.value == doctest::Approx(4.0).epsilon(1e-12));

    const auto mm_rep = m::self_distance_sq(maximally_mixed(2),
                                            ObservableSet::single(pauli_z()),
                                            Cone::Ppt);
    CHECK(mm_rep.value == doctest::Approx(0.0).epsilon(1e-12));

    const auto psi = rand_pure(3, 82).projector();
    const auto su3 = ObservableSet::su(3);
    double var_sum = 0.0;
    for (const auto& h : su3.ops()) var_sum += states::variance(psi, h);
    const auto all_rep = m::self_distance_sq(psi, su3, Cone::All);
    CHECK(all_rep.value == doctest::Approx(var_sum).epsilon(1e-8));
  }
  SUBCASE("closed forms agree with the equal-marginal programs") {
    const auto zset = ObservableSet::single(pauli_z());
    const auto sdp_ppt =
        m::dpt_distance_sq(rho, rho, zset, Formulation::Dpt, Cone::Ppt);
    CHECK(sdp_ppt.value ==
          doctest::Approx(0.25 * m::qfi(rho, pauli_z())).epsilon(1e-5));
    const auto su2 = ObservableSet::su(2);
    const auto sdp_full =
        m::dpt_distance_sq(rho, rho, su2, Formulation::Dpt, Cone::Ppt);
    CHECK(sdp_full.value == doctest::Approx(2.0).epsilon(1e-5));
  }
}

TEST_CASE("modified transport distance") {
  const auto zset = ObservableSet::single(pauli_z());
  const auto rho = rand_mixed(2, 90);

  SUBCASE("zero for identical states") {
    const auto rep = m::modified_dpt_sq(rho, rho, zset, Cone::All);
    CHECK(rep.value == doctest::Approx(0.0).epsilon(1e-5));
  }
  SUBCASE("fixed example keeps its unmodified value (vanishing selfs)") {
    const auto rep = m::modified_dpt_sq(maximally_mixed(2),
                                        PureState::basis_state(2, 0).projector(),
                                        zset, Cone::Ppt);
    CHECK(rep.value == doctest::Approx(1.0).epsilon(1e-4));
  }
  SUBCASE("qubit closed form 2 - 2F on the full generator set") {
    const auto sigma = rand_mixed(2, 91);
    const auto rep = m::modified_dpt_sq(rho, sigma, ObservableSet::su(2), Cone::Ppt);
    const double f = m::uhlmann_fidelity(rho, sigma);
    CHECK(rep.value == doctest::Approx(2.0 - 2.0 * f).epsilon(1e-4));
  }
}

TEST_CASE("swap fidelity") {
  SUBCASE("pure pairs are the squared overlap under both cones") {
    const auto psi = rand_pure(3, 100);
    const auto phi = rand_pure(3, 101);
    const double expect = std::norm(psi.overlap(phi));
    for (auto cone : {Cone::All, Cone::Ppt}) {
      const auto rep =
          m::swap_fidelity(psi.projector(), phi.projector(), cone);
      CHECK(rep.value == doctest::Approx(expect).epsilon(1e-5));
    }
  }
  SUBCASE("fidelity sandwich on random pairs") {
    for (int i = 0; i < 5; ++i) {
      const auto rho = rand_mixed(3, 110 + 2 * i);
      const auto sigma = rand_mixed(3, 111 + 2 * i);
      const double f = m::uhlmann_fidelity(rho, sigma);
      const auto fs = m::swap_fidelity(rho, sigma, Cone::Ppt);
      CHECK(fs.value >= f - 1e-5);
      CHECK(fs.value <= std::sqrt(f) + 1e-5);
      CHECK(fs.bound_kind == BoundKind::UpperBound);  // d = 3 relaxation
    }
  }
  SUBCASE("qubits: PPT swap fidelity equals the fidelity") {
    for (int i = 0; i < 5; ++i) {
      const auto rho = rand_mixed(2, 120 + 2 * i);
      const auto sigma = rand_mixed(2, 121 + 2 * i);
      const auto fs = m::swap_fidelity(rho, sigma, Cone::Ppt);
      CHECK(fs.value ==
            doctest::Approx(m::uhlmann_fidelity(rho, sigma)).epsilon(1e-5));
      CHECK(fs.bound_kind == BoundKind::Exact);
    }
  }
}

TEST_CASE("swap distance") {
  const auto psi = rand_pure(2, 130);
  CHECK(m::swap_distance_sq(psi.projector(), psi.projector(), Cone::All).value ==
        doctest::Approx(0.0).epsilon(1e-5));

  const auto zero = PureState::basis_state(2, 0).projector();
  const auto one = PureState::basis_state(2, 1).projector();
  CHECK(m::swap_distance_sq(zero, one, Cone::All).value ==
        doctest::Approx(0.5).epsilon(1e-5));

  SUBCASE("qubit closed form via the PPT cone") {
    const auto rho = rand_mixed(2, 131);
    const auto sigma = rand_mixed(2, 132);
    const double f = m::uhlmann_fidelity(rho, sigma);
    CHECK(m::swap_distance_sq(rho, sigma, Cone::Ppt).value ==
          doctest::Approx(0.5 * (1.0 - f)).epsilon(1e-5));
  }
  SUBCASE("cross-check against the direct cost-matrix minimization") {
    const auto rho = rand_mixed(2, 133);
    const auto sigma = rand_mixed(2, 134);
    for (auto cone : {Cone::All, Cone::Ppt}) {
      const double via_fs = m::swap_distance_sq(rho, sigma, cone).value;

      qot::sdp::CouplingProgram prog;
      prog.party_dims = {2, 2};
      prog.cost = (Matrix::identity(4) - linalg::swap_operator(2)) * 0.5;
      prog.marginals.push_back({{0}, rho.matrix(), false});
      prog.marginals.push_back({{1}, sigma.matrix(), false});
      if (cone == Cone::Ppt) prog.ppt_cuts.push_back({0});
      const auto direct = qot::sdp::solve(prog);
      CHECK(via_fs == doctest::Approx(direct.value).epsilon(1e-6));
    }
  }
}

TEST_CASE("pure-overlap transport distance (p = 2 pure cost)") {
  const auto rho = rand_mixed(2, 140);
  const auto sigma = rand_mixed(2, 141);
  const double f = m::uhlmann_fidelity(rho, sigma);
  CHECK(m::bsf_distance_sq(rho, sigma).value ==
        doctest::Approx(1.0 - f).epsilon(1e-5));

  const auto psi = rand_pure(3, 142);
  const auto tau = rand_mixed(3, 143);
  CHECK(m::bsf_distance_sq(psi.projector(), tau).value ==
        doctest::Approx(1.0 - states::expectation(tau, psi.projector().matrix()))
            .epsilon(1e-5));

  SUBCASE("sandwiched between the Bures and fidelity complements") {
    const auto a = rand_mixed(3, 144);
    const auto b = rand_mixed(3, 145);
    const double fab = m::uhlmann_fidelity(a, b);
    const double bsf = m::bsf_distance_sq(a, b).value;
    const double fs_all = m::swap_fidelity(a, b, Cone::All).value;
    CHECK(1.0 - std::sqrt(fab) <= 1.0 - fs_all + 1e-5);
    CHECK(1.0 - fs_all <= bsf + 1e-5);
    CHECK(bsf <= 1.0 - fab + 1e-5);
  }
}

TEST_CASE("decomposition distance") {
  const auto zset = ObservableSet::single(pauli_z());
  SUBCASE("fixed example has the closed-form value exactly") {
    const auto rep = m::decomp_distance_sq(
        maximally_mixed(2), PureState::basis_state(2, 0).projector(), zset);
    CHECK(rep.value == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rep.bound_kind == BoundKind::Exact);
  }
  SUBCASE("full qubit set: 2(1 - F)") {
    const auto rho = rand_mixed(2, 150);
    const auto sigma = rand_mixed(2, 151);
    const auto rep = m::decomp_distance_sq(rho, sigma, ObservableSet::su(2));
    CHECK(rep.value ==
          doctest::Approx(2.0 - 2.0 * m::uhlmann_fidelity(rho, sigma))
              .epsilon(1e-4));
    CHECK(rep.value <= 2.0 + 1e-6);
  }
  SUBCASE("generic sets report an interval") {
    const auto rho = rand_mixed(3, 152);
    const auto sigma = rand_mixed(3, 153);
    const auto gens = qot::linalg::su_generators(3);
    const auto subset = ObservableSet::from_list(
        {gens[0], gens[1], gens[2]});  // N = 3, not a full set
    const auto rep = m::decomp_distance_sq(rho, sigma, subset);
    CHECK(rep.bound_kind == BoundKind::Interval);
    CHECK(rep.interval[0] <= rep.interval[1] + 1e-12);
    CHECK(rep.interval[0] ==
          doctest::Approx(m::euclid_sq(rho, sigma, subset)).epsilon(1e-9));
  }
}

TEST_CASE("decomposition upper bound") {
  const auto su2 = ObservableSet::su(2);
  const auto psi = rand_pure(2, 160).projector();
  const auto sigma = rand_mixed(2, 161);
  CHECK(m::decomp_upper_bound(psi, sigma, su2) ==
        doctest::Approx(m::delta_sq(psi, sigma, su2)).epsilon(1e-9));

  double var_sum = 0.0;
  for (const auto& h : su2.ops()) var_sum += states::variance(psi, h);
  CHECK(m::decomp_upper_bound(psi, psi, su2) ==
        doctest::Approx(var_sum).epsilon(1e-9));

  for (int i = 0; i < 4; ++i) {
    const auto rho = rand_mixed(2, 170 + 2 * i);
    const auto tau = rand_mixed(2, 171 + 2 * i);
    const double bound = m::decomp_upper_bound(rho, tau, su2);
    const double ppt =
        m::dpt_distance_sq(rho, tau, su2, Formulation::Dpt, Cone::Ppt).value;
    CHECK(bound >= ppt - 1e-5);
  }
}

TEST_CASE("p = 2 swap fidelity") {
  SUBCASE("pure pairs give the fourth power of the overlap") {
    const auto psi = rand_pure(2, 180);
    const auto phi = rand_pure(2, 181);
    const double x = std::norm(psi.overlap(phi));
    const auto rep = m::p_swap_fidelity(psi.projector(), phi.projector());
    CHECK(rep.value == doctest::Approx(x * x).epsilon(1e-4));
  }
  SUBCASE("symmetric-subspace constraints do not move the optimum") {
    const auto rho = rand_mixed(2, 182);
    const auto sigma = rand_mixed(2, 183);
    const auto with_sym = m::p_swap_fidelity(rho, sigma, 2, true);
    const auto no_sym = m::p_swap_fidelity(rho, sigma, 2, false);
    CHECK(with_sym.value == doctest::Approx(no_sym.value).epsilon(2e-4));
  }
  SUBCASE("dominated by the plain swap fidelity for qubits") {
    const auto rho = rand_mixed(2, 184);
    const auto sigma = rand_mixed(2, 185);
    const double p2 = m::p_swap_fidelity(rho, sigma).value;
    const double fs = m::swap_fidelity(rho, sigma, Cone::Ppt).value;
    CHECK(p2 <= fs + 1e-4);
  }
  SUBCASE("guards") {
    const auto rho = rand_mixed(2, 186);
    CHECK_THROWS_AS(m::p_swap_fidelity(rho, rho, 3), std::invalid_argument);
    const auto big = rand_mixed(3, 187);
    CHECK_THROWS_AS(m::p_swap_fidelity(big, big, 2), std::invalid_argument);
  }
}

TEST_CASE("p = 2 overlap-power transport distance") {
  const auto psi = rand_pure(2, 190);
  CHECK(m::bsf_p_distance_sq(psi.projector(), psi.projector()).value ==
        doctest::Approx(0.0).epsilon(1e-4));

  const auto zero = PureState::basis_state(2, 0).projector();
  const auto one = PureState::basis_state(2, 1).projector();
  const auto orth = m::bsf_p_distance_sq(zero, one);
  CHECK(orth.value == doctest::Approx(1.0).epsilon(1e-4));

  const auto phi = rand_pure(2, 191);
  const double x = std::norm(psi.overlap(phi));
  const auto rep = m::bsf_p_distance_sq(psi.projector(), phi.projector());
  CHECK(rep.value == doctest::Approx((1.0 - x) * (1.0 - x)).epsilon(1e-4));
  CHECK(rep.bound_kind == BoundKind::Interval);
  CHECK(rep.interval[0] <= rep.value + 1e-12);
}

TEST_CASE("fidelity second derivative") {
  CHECK(m::fidelity_second_derivative(plus_state().projector(), pauli_z(), 1e-2) ==
        doctest::Approx(-2.0).epsilon(1e-3));
  CHECK(m::fidelity_second_derivative(maximally_mixed(2), pauli_z(), 1e-2) ==
        doctest::Approx(0.0).epsilon(1e-9));

  const auto rho = rand_mixed(3, 200);
  const Matrix h = linalg::jz_operator(3);
  CHECK(m::fidelity_second_derivative(rho, h, 2e-2) ==
        doctest::Approx(-0.5 * m::qfi(rho, h)).epsilon(1e-2));

  CHECK_THROWS_AS(m::fidelity_second_derivative(rho, h, 1e-4),
                  std::invalid_argument);
}

TEST_CASE("relation spot checks on random instances") {
  const auto su2 = ObservableSet::su(2);
  for (int i = 0; i < 4; ++i) {
    const auto rho = rand_mixed(2, 210 + 2 * i);
    const auto sigma = rand_mixed(2, 211 + 2 * i);

    const auto d_all =
        m::dpt_distance_sq(rho, sigma, su2, Formulation::Dpt, Cone::All);
    const auto d_ppt =
        m::dpt_distance_sq(rho, sigma, su2, Formulation::Dpt, Cone::Ppt);
    const auto g_ppt =
        m::dpt_distance_sq(rho, sigma, su2, Formulation::Gmpc, Cone::Ppt);
    CHECK(d_ppt.value >= d_all.value - 2e-5);
    CHECK(g_ppt.value == doctest::Approx(d_ppt.value).epsilon(2e-5));

    const double fs = m::swap_fidelity(rho, sigma, Cone::Ppt).value;
    CHECK(d_ppt.value == doctest::Approx(4.0 - 2.0 * fs).epsilon(2e-5));
    CHECK(d_ppt.value >= 2.0 - 1e-5);

    const auto self_r = m::self_distance_sq(rho, su2, Cone::Ppt);
    const auto self_s = m::self_distance_sq(sigma, su2, Cone::Ppt);
    CHECK(d_ppt.value >= 0.5 * (self_r.value + self_s.value) - 1e-5);
  }
}

TEST_CASE("iteration cap propagates as an interval report") {
  const auto rho = rand_mixed(2, 220);
  const auto sigma = rand_mixed(2, 221);
  qot::sdp::SolverSettings settings;
  settings.max_iter = 3;
  const auto rep = m::swap_fidelity(rho, sigma, Cone::Ppt, settings);
  CHECK(rep.bound_kind == BoundKind::Interval);
  CHECK(rep.diag.status == qot::sdp::SolveStatus::MaxIter);
  CHECK(rep.interval[0] <= rep.value + 1e-12);
  CHECK(rep.interval[1] >= rep.value - 1e-12);
}
