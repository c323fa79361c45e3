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

#ifndef QOT_STATES_HPP_
#define QOT_STATES_HPP_

#include <cstdint>
#include <vector>

#include "qot/matrix.hpp"

namespace qot::states {

/// Deterministic sampling handle: identical (seed, stream) always yields
/// the identical sample; distinct streams are independent.
struct SeedSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

/// xoshiro256++ seeded through SplitMix64 from (seed, stream). Gaussians
/// via Box-Muller on 53-bit uniforms.
class Rng {
 public:
  explicit Rng(SeedSpec spec);
  std::uint64_t next_u64();
  double uniform();   // in (0, 1)
  double gaussian();  // standard normal
  Cplx gaussian_cplx() { return {gaussian(), gaussian()}; }

 private:
  std::uint64_t s_[4];
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Unit-trace positive semidefinite Hermitian matrix. Construction
/// validates trace (1e-10), Hermiticity (1e-12 relative) and spectrum
/// (min eigenvalue >= -1e-9), then stores the symmetrized matrix.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m);

  /// Repair route for solver output: clip negative eigenvalues and
  /// renormalize the trace, then validate. Meant for matrices that are a
  /// solver tolerance away from the cone, not arbitrary input.
  static DensityMatrix from_solver(const Matrix& m);

  int dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }

 private:
  struct already_valid {};
  DensityMatrix(Matrix m, already_valid) : m_(std::move(m)) {}
  Matrix m_;
};

class PureState {
 public:
  explicit PureState(std::vector<Cplx> amplitudes);

  int dim() const { return int(amps_.size()); }
  const std::vector<Cplx>& amplitudes() const { return amps_; }
  Cplx overlap(const PureState& other) const;  // <this|other>
  DensityMatrix projector() const;

  static PureState basis_state(int d, int k);

 private:
  std::vector<Cplx> amps_;
};

/// Convex mixture of pure (product) states: weights p_k with left states
/// |Psi_k> and, optionally, right states |Phi_k> of a product coupling.
struct PureDecomposition {
  std::vector<double> weights;
  std::vector<PureState> left;
  std::vector<PureState> right;  // empty unless a coupling is described
};

/// Validates sum(p)=1 (1e-10), p>=0, and that the weighted projector sum
/// reproduces `declared_marginal` to 1e-8 (max entry).
PureDecomposition make_pure_decomposition(std::vector<double> weights,
                                          std::vector<PureState> left,
                                          const Matrix& declared_marginal);

/// rho = G G^dag / Tr(G G^dag) with G a d x d matrix of independent
/// standard complex Gaussians: the Hilbert-Schmidt ensemble.
DensityMatrix random_density_hs(int d, SeedSpec seed);

/// Haar-random pure state (normalized complex Gaussian vector).
PureState random_pure(int d, SeedSpec seed);

/// e^{-iH theta} rho e^{+iH theta}, computed from the eigendecomposition
/// of H. Preserves the spectrum of rho.
DensityMatrix evolve(const DensityMatrix& rho, const Matrix& h, double theta);

double expectation(const DensityMatrix& rho, const Matrix& h);
double variance(const DensityMatrix& rho, const Matrix& h);
double purity(const DensityMatrix& rho);

/// Spectral decomposition as a PureDecomposition: weights are the
/// eigenvalues with anything below 1e-12 dropped and the rest
/// renormalized, states are the matching eigenvectors.
PureDecomposition eigen_decomposition_of_state(const DensityMatrix& rho);

}  // namespace qot::states

#endif  // QOT_STATES_HPP_
