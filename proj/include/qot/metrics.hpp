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

#ifndef QOT_METRICS_HPP_
#define QOT_METRICS_HPP_

#include <array>
#include <optional>
#include <string>

#include "qot/observables.hpp"
#include "qot/sdp.hpp"
#include "qot/states.hpp"

namespace qot::metrics {

using states::DensityMatrix;

/// Which set of couplings an optimization runs over. Separability itself
/// is not computable directly; Ppt optimizes over states with positive
/// partial transpose, which coincides with the separable set for two
/// qubits and brackets it elsewhere (the direction of the bracket is
/// recorded in each DistanceReport).
enum class Cone { All, Ppt };

enum class Formulation { Dpt, Gmpc };

/// How to read DistanceReport::value relative to the quantity it names.
/// Exact is used for closed forms, cone=All optima, and d=2 PPT results
/// (PPT = separable there). Lower/UpperBound mark the PPT relaxation of a
/// separable optimum at d >= 3. Interval carries an explicit [lo, hi].
enum class BoundKind { Exact, LowerBound, UpperBound, Interval };

struct SolverDiagnostics {
  long iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double gap = 0.0;
  sdp::SolveStatus status = sdp::SolveStatus::Converged;
  bool used_solver = false;
};

struct DistanceReport {
  double value = 0.0;
  BoundKind bound_kind = BoundKind::Exact;
  std::array<double, 2> interval{0.0, 0.0};
  std::string method;
  /// Optimizer of the underlying program, repaired to a valid state
  /// (eigenvalue clip + trace renormalization at solver accuracy).
  std::optional<states::DensityMatrix> coupling;
  SolverDiagnostics diag;
};

// ---- closed-form scalar quantities ----

/// Uhlmann-Jozsa fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, in [0,1].
double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Tr(rho sigma) + sqrt((1-Tr rho^2)(1-Tr sigma^2)); upper-bounds the
/// fidelity, equals it for qubits.
double superfidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// 2 (1 - sqrt(F)).
double bures_distance_sq(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Quantum Fisher information 2 sum_{kl} (l_k-l_l)^2/(l_k+l_l) |<k|H|l>|^2.
/// Terms with l_k + l_l <= 1e-12 are skipped (their limit is zero).
double qfi(const DensityMatrix& rho, const Matrix& h);

/// Wigner-Yanase skew information Tr(H^2 rho) - Tr(H sqrt(rho) H sqrt(rho)).
double skew_information(const DensityMatrix& rho, const Matrix& h);

/// (1/2) sum_n [Var_rho(H_n) + Var_sigma(H_n) + (<H_n>_rho - <H_n>_sigma)^2];
/// the pure-pair value of the transport distances below.
double delta_sq(const DensityMatrix& rho, const DensityMatrix& sigma,
                const ObservableSet& obs);

/// (1/2) sum_n (<H_n>_rho - <H_n>_sigma)^2.
double euclid_sq(const DensityMatrix& rho, const DensityMatrix& sigma,
                 const ObservableSet& obs);

// ---- coupling optimizations ----

/// Squared transport distance over couplings with the given marginals.
/// Dpt uses the literal transposed formulation: cost terms
/// (H_n^T (x) 1 - 1 (x) H_n)^2 with party-2 marginal rho^T and party-1
/// marginal sigma. Gmpc uses plain operators and plain marginals. No
/// algebraic simplification is applied to either, so their agreement on
/// full generator sets under PPT is a genuine cross-check.
DistanceReport dpt_distance_sq(const DensityMatrix& rho,
                               const DensityMatrix& sigma,
                               const ObservableSet& obs,
                               Formulation formulation, Cone cone,
                               const sdp::SolverSettings& settings = {});

/// Self-distance. cone=All: closed form sum_n I_rho(H_n) (skew
/// information), no solver. cone=Ppt: closed forms qfi/4 for N=1 and
/// 2(d-1) for a full set; otherwise the equal-marginals program.
DistanceReport self_distance_sq(const DensityMatrix& rho,
                                const ObservableSet& obs, Cone cone,
                                const sdp::SolverSettings& settings = {});

/// D^2 - (self_rho^2 + self_sigma^2)/2 with the matching cone. Negative
/// results above -1e-6 are numerical noise and clipped to zero; anything
/// more negative violates the self-distance lower bound and throws, since
/// it can only come from a solver failure.
DistanceReport modified_dpt_sq(const DensityMatrix& rho,
                               const DensityMatrix& sigma,
                               const ObservableSet& obs, Cone cone,
                               const sdp::SolverSettings& settings = {});

/// max Tr(X S) over couplings with marginals rho, sigma.
DistanceReport swap_fidelity(const DensityMatrix& rho,
                             const DensityMatrix& sigma, Cone cone,
                             const sdp::SolverSettings& settings = {});

/// (1 - swap_fidelity)/2; equivalently min Tr(X (1-S)/2).
DistanceReport swap_distance_sq(const DensityMatrix& rho,
                                const DensityMatrix& sigma, Cone cone,
                                const sdp::SolverSettings& settings = {});

/// 1 - swap_fidelity(ppt): the p=2 pure-overlap transport distance
/// squared. Exact for qubits, a lower bound of the separable value above.
DistanceReport bsf_distance_sq(const DensityMatrix& rho,
                               const DensityMatrix& sigma,
                               const sdp::SolverSettings& settings = {});

/// Transport distance over decompositions into pure product states with
/// the zero-self-distance (Euclidean) pure cost. Exact closed forms exist
/// for N = 1, N = 2 and full generator sets; other sets get an interval
/// [euclid_sq, modified_dpt_sq(ppt)].
DistanceReport decomp_distance_sq(const DensityMatrix& rho,
                                  const DensityMatrix& sigma,
                                  const ObservableSet& obs,
                                  const sdp::SolverSettings& settings = {});

/// sum_k lambda_k Delta^2(|k>, sigma) over the eigendecomposition of rho:
/// a feasible-decomposition upper bound on the separable (and PPT)
/// transport distance.
double decomp_upper_bound(const DensityMatrix& rho, const DensityMatrix& sigma,
                          const ObservableSet& obs);

/// p-SWAP fidelity over 2p-party couplings: maximize Tr(X S_p) with rho
/// on the first p parties and sigma on the last p, PPT across the
/// (1..p | p+1..2p) cut and each single-party cut. Only p = 2 with
/// d^(2p) <= 16 is implemented.
DistanceReport p_swap_fidelity(const DensityMatrix& rho,
                               const DensityMatrix& sigma, int p = 2,
                               bool enforce_symmetric = true,
                               const sdp::SolverSettings& settings = {});

/// [min Tr(X O)]^(2/p) with O = (x)_k (1 - S^(k,k+p)) under the same
/// 2p-party constraints. The O-based integrand on pure products is
/// (1-|<psi|phi>|^2)^p, i.e. the p-sum convention with exponent p, not
/// p/2; the interval reports [m^(2/p), m^(1/p)] to cover both readings
/// (value = m^(2/p), the operator definition taken literally).
DistanceReport bsf_p_distance_sq(const DensityMatrix& rho,
                                 const DensityMatrix& sigma, int p = 2,
                                 const sdp::SolverSettings& settings = {});

/// Central finite difference [F(rho, rho_step) + F(rho, rho_-step) - 2] /
/// step^2 of the fidelity along e^{-iH theta}; equals -qfi/2 up to
/// O(step^2). step must lie in [1e-3, 1e-1].
double fidelity_second_derivative(const DensityMatrix& rho, const Matrix& h,
                                  double step);

// Program builders, exposed for tests and the verification suite.
sdp::CouplingProgram make_dpt_program(const DensityMatrix& rho,
                                      const DensityMatrix& sigma,
                                      const ObservableSet& obs,
                                      Formulation formulation, Cone cone);
sdp::CouplingProgram make_swap_program(const DensityMatrix& rho,
                                       const DensityMatrix& sigma, Cone cone);

}  // namespace qot::metrics

#endif  // QOT_METRICS_HPP_
