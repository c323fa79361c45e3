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

#ifndef QOT_LINALG_HPP_
#define QOT_LINALG_HPP_

#include <vector>

#include "qot/matrix.hpp"

namespace qot::linalg {

/// Spectral decomposition M = V diag(lambda) V^dag of a Hermitian matrix.
/// Eigenvalues ascending, eigenvectors are the orthonormal columns of V.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;

  /// V diag(f(lambda)) V^dag for per-eigenvalue weights f(lambda).
  Matrix assemble(const std::vector<double>& weights) const;
};

struct EigOptions {
  double threshold = 1e-14;  // off-diagonal cutoff, relative to max |entry|
  int max_sweeps = 100;
};

/// Cyclic Jacobi for complex Hermitian matrices. The input must be
/// Hermitian to 1e-12 (max entry defect); it is symmetrized internally
/// before sweeping. Throws std::runtime_error with the residual in the
/// message if the sweep cap is hit before the threshold is reached.
EigenDecomposition hermitian_eig(const Matrix& m, const EigOptions& opt = {});

/// Principal square root of a PSD matrix. Eigenvalues in [-1e-10, 0) are
/// clipped to zero; anything below -1e-10 throws ("not PSD").
Matrix psd_sqrt(const Matrix& m);

/// Nearest PSD matrix in Frobenius norm (negative eigenvalues clipped).
/// When min_eig is non-null it receives the smallest eigenvalue of the
/// input, which callers use as a cone-violation diagnostic.
Matrix psd_project(const Matrix& m, double* min_eig = nullptr);

double min_eigenvalue(const Matrix& m);

Matrix kron(const Matrix& a, const Matrix& b);

/// Partial trace over the parties listed in `traced` (0-based, in the
/// order given by `dims`). prod(dims) must equal the matrix dimension.
Matrix partial_trace(const Matrix& m, const std::vector<int>& dims,
                     const std::vector<int>& traced);

/// Transpose the listed parties in place, leaving the rest untouched.
Matrix partial_transpose(const Matrix& m, const std::vector<int>& dims,
                         const std::vector<int>& parties);

/// Embed an operator acting jointly on the listed parties (in that order)
/// into the full space, identity on the remaining parties.
Matrix lift_onto_parties(const Matrix& op, const std::vector<int>& dims,
                         const std::vector<int>& parties);

/// SWAP on C^d (x) C^d: S(|a>(x)|b>) = |b>(x)|a>. S^2 = I, Tr S = d.
Matrix swap_operator(int d);

/// The d^2-1 generalized Gell-Mann matrices: traceless Hermitian with
/// Tr(H_n H_m) = 2 delta_nm. Ordering (fixed so downstream CSV output is
/// reproducible): symmetric pair matrices E_jk + E_kj for j<k in row-major
/// pair order, then antisymmetric -i(E_jk - E_kj) in the same pair order,
/// then the d-1 diagonal matrices.
std::vector<Matrix> su_generators(int d);

/// diag(-(d-1)/2, ..., (d-1)/2), the collective spin z-component.
Matrix jz_operator(int d);

/// Projector onto the symmetric subspace of (C^d)^(x p).
/// Rank C(d+p-1, p); for p=2 equals (I + S)/2.
Matrix symmetric_projector(int d, int p);

}  // namespace qot::linalg

#endif  // QOT_LINALG_HPP_
