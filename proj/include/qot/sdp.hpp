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

#ifndef QOT_SDP_HPP_
#define QOT_SDP_HPP_

#include <array>
#include <vector>

#include "qot/matrix.hpp"

namespace qot::sdp {

enum class Sense { Minimize, Maximize };

/// Fix the reduced state on `kept_parties` (joint, in the listed order):
///   Tr_{other parties}(X) = target        (transpose_target = false)
///   Tr_{other parties}(X) = target^T      (transpose_target = true)
struct MarginalSpec {
  std::vector<int> kept_parties;
  Matrix target;
  bool transpose_target = false;
};

/// Tr(a X) = b with Hermitian a.
struct Constraint {
  Matrix a;
  double b;
};

/// Extremize Tr(cost X) over Hermitian X on the composite space given by
/// party_dims, subject to marginal equalities, extra scalar equalities,
/// PSD membership of X, PSD membership of the partial transposes over
/// each cut in ppt_cuts, and (optionally) unit overlap with the symmetric
/// subspace on the listed party blocks.
struct CouplingProgram {
  Sense sense = Sense::Minimize;
  Matrix cost;
  std::vector<int> party_dims;
  std::vector<MarginalSpec> marginals;
  std::vector<Constraint> equalities;
  std::vector<std::vector<int>> ppt_cuts;
  std::vector<std::vector<int>> symmetric_blocks;

  int dim() const;
};

struct SolverSettings {
  double tol_primal = 1e-7;
  double tol_dual = 1e-7;
  double tol_gap = 1e-6;  // enters interval reporting, not the stop rule
  long max_iter = 200000;
  double relaxation = 1.6;   // over-relaxation in (1, 2)
  double penalty = 1.0;      // initial ADMM penalty
  bool adaptive_penalty = true;
  int check_interval = 25;   // penalty updates and dual polish cadence
};

enum class SolveStatus { Converged, MaxIter, Infeasible };

struct SdpResult {
  double value = 0.0;
  Matrix optimizer;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double gap = 0.0;
  std::array<double, 2> value_interval{0.0, 0.0};
  long iterations = 0;
  SolveStatus status = SolveStatus::MaxIter;
};

/// The orthonormalized affine system of a program: Hermitian basis
/// matrices with pairwise Hilbert-Schmidt inner product delta_ij, and the
/// transformed right-hand sides. Redundant raw constraints (e.g. the
/// doubled trace condition from two marginals) are removed. When the raw
/// system is inconsistent, `consistent` is false and `inconsistency`
/// holds the offending residual magnitude.
struct AffineSystem {
  std::vector<Matrix> basis;
  std::vector<double> rhs;
  int raw_count = 0;
  bool consistent = true;
  double inconsistency = 0.0;
};

/// Expand the marginal specs of a program into raw scalar equalities.
/// Throws std::invalid_argument on dimension errors or when two marginal
/// targets have mismatched traces.
std::vector<Constraint> marginal_constraints(
    const std::vector<int>& party_dims,
    const std::vector<MarginalSpec>& marginals);

/// Raw constraints of the whole program (marginals, symmetric blocks,
/// extra equalities), in that order.
std::vector<Constraint> all_constraints(const CouplingProgram& prog);

/// Orthonormalized affine system for the whole program.
AffineSystem build_marginal_constraints(const CouplingProgram& prog);

/// Consensus operator splitting: one block projects onto the affine
/// subspace, one block per cone projects by eigenvalue clipping (after
/// partial transposition for PPT cones). Never throws for solver-side
/// trouble: MaxIter results carry honest residuals, and an inconsistent
/// equality system yields status Infeasible.
SdpResult solve(const CouplingProgram& prog, const SolverSettings& settings = {});

struct ResidualReport {
  double max_marginal_dev = 0.0;
  double max_equality_dev = 0.0;
  double min_eig = 0.0;
  std::vector<double> min_ppt_eigs;
  double objective = 0.0;
};

ResidualReport verify_solution(const CouplingProgram& prog, const Matrix& x);

}  // namespace qot::sdp

#endif  // QOT_SDP_HPP_
