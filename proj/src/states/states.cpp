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

#include "qot/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qot/kernels.hpp"
#include "qot/linalg.hpp"

namespace qot::states {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::uint64_t splitmix64(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

Rng::Rng(SeedSpec spec) {
  // Fold the stream index into the SplitMix chain so streams decorrelate.
  std::uint64_t chain = spec.seed ^ (spec.stream * 0xD2B74407B1CE6E93ULL +
                                     0x8BB84E8963BF5521ULL);
  for (auto& si : s_) si = splitmix64(chain);
  bool all_zero = true;
  for (auto si : s_) all_zero &= (si == 0);
  if (all_zero) s_[0] = 1;  // xoshiro state must not be all zero
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() {
  const std::uint64_t bits = next_u64() >> 11;  // 53 bits
  double u = double(bits) * 0x1.0p-53;
  if (u <= 0.0) u = 0x1.0p-53;
  return u;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  have_spare_ = true;
  return r * std::cos(phi);
}

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
  require(m_.is_square() && m_.rows() >= 1, "DensityMatrix: not square");
  require(m_.hermiticity_defect() <= 1e-12 * std::max(1.0, m_.max_abs()),
          "DensityMatrix: not Hermitian");
  m_.hermitize();
  require(std::abs(m_.trace().real() - 1.0) <= 1e-10,
          "DensityMatrix: trace != 1");
  require(linalg::min_eigenvalue(m_) >= -1e-9, "DensityMatrix: not PSD");
}

DensityMatrix DensityMatrix::from_solver(const Matrix& m) {
  Matrix h = m;
  h.hermitize();
  Matrix p = linalg::psd_project(h);
  const double tr = p.trace().real();
  if (!(tr > 0.0)) throw std::invalid_argument("from_solver: zero trace");
  p *= Cplx(1.0 / tr, 0.0);
  return DensityMatrix(std::move(p), already_valid{});
}

PureState::PureState(std::vector<Cplx> amplitudes) : amps_(std::move(amplitudes)) {
  require(!amps_.empty(), "PureState: empty");
  double norm2 = 0.0;
  for (const Cplx& a : amps_) norm2 += std::norm(a);
  require(std::abs(std::sqrt(norm2) - 1.0) <= 1e-12, "PureState: not normalized");
}

Cplx PureState::overlap(const PureState& other) const {
  require(dim() == other.dim(), "PureState: dimension mismatch");
  return kernels::active().dotc(amps_.data(), other.amps_.data(), amps_.size());
}

DensityMatrix PureState::projector() const {
  const int d = dim();
  Matrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = amps_[i] * std::conj(amps_[j]);
  return DensityMatrix(std::move(m));
}

PureState PureState::basis_state(int d, int k) {
  require(k >= 0 && k < d, "basis_state: index out of range");
  std::vector<Cplx> a(d, Cplx(0.0));
  a[k] = 1.0;
  return PureState(std::move(a));
}

PureDecomposition make_pure_decomposition(std::vector<double> weights,
                                          std::vector<PureState> left,
                                          const Matrix& declared_marginal) {
  require(weights.size() == left.size(),
          "PureDecomposition: weight/state count mismatch");
  double total = 0.0;
  for (double w : weights) {
    require(w >= 0.0, "PureDecomposition: negative weight");
    total += w;
  }
  require(std::abs(total - 1.0) <= 1e-10, "PureDecomposition: weights not normalized");

  const int d = declared_marginal.rows();
  Matrix sum(d, d);
  for (std::size_t k = 0; k < weights.size(); ++k) {
    require(left[k].dim() == d, "PureDecomposition: state dim mismatch");
    sum += weights[k] * left[k].projector().matrix();
  }
  require(max_abs_diff(sum, declared_marginal) <= 1e-8,
          "PureDecomposition: does not reproduce the declared marginal");
  PureDecomposition out;
  out.weights = std::move(weights);
  out.left = std::move(left);
  return out;
}

DensityMatrix random_density_hs(int d, SeedSpec seed) {
  require(d >= 2, "random_density_hs: d must be >= 2");
  Rng rng(seed);
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = rng.gaussian_cplx();
  Matrix rho = g * g.adjoint();
  rho *= Cplx(1.0 / rho.trace().real(), 0.0);
  rho.hermitize();
  return DensityMatrix(std::move(rho));
}

PureState random_pure(int d, SeedSpec seed) {
  require(d >= 2, "random_pure: d must be >= 2");
  Rng rng(seed);
  std::vector<Cplx> a(d);
  double norm2 = 0.0;
  for (auto& v : a) {
    v = rng.gaussian_cplx();
    norm2 += std::norm(v);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& v : a) v *= inv;
  // One exact renormalization pass so the stored norm is 1 to roundoff.
  norm2 = 0.0;
  for (const auto& v : a) norm2 += std::norm(v);
  const double inv2 = 1.0 / std::sqrt(norm2);
  for (auto& v : a) v *= inv2;
  return PureState(std::move(a));
}

DensityMatrix evolve(const DensityMatrix& rho, const Matrix& h, double theta) {
  require(h.is_square() && h.rows() == rho.dim(), "evolve: dimension mismatch");
  const linalg::EigenDecomposition ed = linalg::hermitian_eig(h);
  const int d = rho.dim();
  Matrix u(d, d);
  for (int i = 0; i < d; ++i) {
    const double ang = -ed.eigenvalues[i] * theta;
    const Cplx ph(std::cos(ang), std::sin(ang));
    for (int r = 0; r < d; ++r) u(r, i) = ed.eigenvectors(r, i) * ph;
  }
  u = u * ed.eigenvectors.adjoint();  // e^{-iH theta}
  Matrix out = u * rho.matrix() * u.adjoint();
  out.hermitize();
  out *= Cplx(1.0 / out.trace().real(), 0.0);
  return DensityMatrix(std::move(out));
}

double expectation(const DensityMatrix& rho, const Matrix& h) {
  require(h.is_square() && h.rows() == rho.dim(),
          "expectation: dimension mismatch");
  return hs_dot(h, rho.matrix());
}

double variance(const DensityMatrix& rho, const Matrix& h) {
  require(h.is_square() && h.rows() == rho.dim(), "variance: dimension mismatch");
  const double mean = expectation(rho, h);
  const double msq = hs_dot(h * h, rho.matrix());
  return msq - mean * mean;
}

double purity(const DensityMatrix& rho) {
  return hs_dot(rho.matrix(), rho.matrix());
}

PureDecomposition eigen_decomposition_of_state(const DensityMatrix& rho) {
  const linalg::EigenDecomposition ed = linalg::hermitian_eig(rho.matrix());
  const int d = rho.dim();
  std::vector<double> w;
  std::vector<PureState> states;
  double total = 0.0;
  for (int j = d - 1; j >= 0; --j) {  // descending weight order
    const double lam = ed.eigenvalues[j];
    if (lam < 1e-12) continue;
    std::vector<Cplx> amps(d);
    double norm2 = 0.0;
    for (int i = 0; i < d; ++i) {
      amps[i] = ed.eigenvectors(i, j);
      norm2 += std::norm(amps[i]);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amps) a *= inv;
    w.push_back(lam);
    states.emplace_back(std::move(amps));
    total += lam;
  }
  for (double& x : w) x /= total;
  return make_pure_decomposition(std::move(w), std::move(states), rho.matrix());
}

}  // namespace qot::states
