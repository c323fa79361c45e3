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

#include "qot/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qot/linalg.hpp"

namespace qot::metrics {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void require_same_dim(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require(rho.dim() == sigma.dim(), "state dimension mismatch");
}

void require_obs_dim(const DensityMatrix& rho, const ObservableSet& obs) {
  require(rho.dim() == obs.dim(), "observable dimension mismatch");
}

SolverDiagnostics diag_of(const sdp::SdpResult& r) {
  SolverDiagnostics d;
  d.iterations = r.iterations;
  d.primal_residual = r.primal_residual;
  d.dual_residual = r.dual_residual;
  d.gap = r.gap;
  d.status = r.status;
  d.used_solver = true;
  return d;
}

BoundKind ppt_min_kind(int d) {
  // PPT is a superset of the separable couplings: a PPT minimum
  // lower-bounds the separable minimum, except for qubits where the two
  // sets coincide.
  return d == 2 ? BoundKind::Exact : BoundKind::LowerBound;
}

BoundKind ppt_max_kind(int d) {
  return d == 2 ? BoundKind::Exact : BoundKind::UpperBound;
}

DistanceReport report_from_solve(const sdp::SdpResult& r, BoundKind kind,
                                 std::string method) {
  DistanceReport rep;
  rep.value = r.value;
  rep.interval = r.value_interval;
  rep.method = std::move(method);
  rep.diag = diag_of(r);
  rep.bound_kind =
      r.status == sdp::SolveStatus::MaxIter ? BoundKind::Interval : kind;
  if (r.optimizer.rows() > 0 && r.status != sdp::SolveStatus::Infeasible)
    rep.coupling = states::DensityMatrix::from_solver(r.optimizer);
  return rep;
}

// value' = a * value + b, propagated through the interval (a < 0 swaps
// the endpoints and flips one-sided bounds).
DistanceReport affine_of(DistanceReport rep, double a, double b) {
  rep.value = a * rep.value + b;
  double lo = a * rep.interval[0] + b;
  double hi = a * rep.interval[1] + b;
  if (lo > hi) std::swap(lo, hi);
  rep.interval = {lo, hi};
  if (a < 0.0) {
    if (rep.bound_kind == BoundKind::LowerBound)
      rep.bound_kind = BoundKind::UpperBound;
    else if (rep.bound_kind == BoundKind::UpperBound)
      rep.bound_kind = BoundKind::LowerBound;
  }
  return rep;
}

DistanceReport closed_form(double value, std::string method) {
  DistanceReport rep;
  rep.value = value;
  rep.bound_kind = BoundKind::Exact;
  rep.interval = {value, value};
  rep.method = std::move(method);
  return rep;
}

}  // namespace

double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  const Matrix r = linalg::psd_sqrt(rho.matrix());
  Matrix m = r * sigma.matrix() * r;
  m.hermitize();
  const auto ed = linalg::hermitian_eig(m);
  double acc = 0.0;
  for (double lam : ed.eigenvalues) acc += std::sqrt(std::max(0.0, lam));
  return acc * acc;
}

double superfidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  const double overlap = hs_dot(rho.matrix(), sigma.matrix());
  const double pr = std::max(0.0, 1.0 - states::purity(rho));
  const double ps = std::max(0.0, 1.0 - states::purity(sigma));
  return overlap + std::sqrt(pr * ps);
}

double bures_distance_sq(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return 2.0 * (1.0 - std::sqrt(std::max(0.0, uhlmann_fidelity(rho, sigma))));
}

double qfi(const DensityMatrix& rho, const Matrix& h) {
  require(h.is_square() && h.rows() == rho.dim(), "qfi: dimension mismatch");
  const auto ed = linalg::hermitian_eig(rho.matrix());
  const int d = rho.dim();
  const Matrix b = ed.eigenvectors.adjoint() * h * ed.eigenvectors;
  double acc = 0.0;
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) {
      const double lk = std::max(0.0, ed.eigenvalues[k]);
      const double ll = std::max(0.0, ed.eigenvalues[l]);
      if (lk + ll <= 1e-12) continue;
      const double diff = lk - ll;
      acc += diff * diff / (lk + ll) * std::norm(b(k, l));
    }
  return 2.0 * acc;
}

double skew_information(const DensityMatrix& rho, const Matrix& h) {
  require(h.is_square() && h.rows() == rho.dim(),
          "skew_information: dimension mismatch");
  const Matrix r = linalg::psd_sqrt(rho.matrix());
  const Matrix hr = h * r;
  const double t1 = hs_dot(h * h, rho.matrix());
  const double t2 = (hr * hr).trace().real();
  double val = t1 - t2;
  if (val < 0.0 && val > -1e-10) val = 0.0;
  return val;
}

double delta_sq(const DensityMatrix& rho, const DensityMatrix& sigma,
                const ObservableSet& obs) {
  require_same_dim(rho, sigma);
  require_obs_dim(rho, obs);
  double acc = 0.0;
  for (const auto& h : obs.ops()) {
    const double gap = states::expectation(rho, h) - states::expectation(sigma, h);
    acc += states::variance(rho, h) + states::variance(sigma, h) + gap * gap;
  }
  return 0.5 * acc;
}

double euclid_sq(const DensityMatrix& rho, const DensityMatrix& sigma,
                 const ObservableSet& obs) {
  require_same_dim(rho, sigma);
  require_obs_dim(rho, obs);
  double acc = 0.0;
  for (const auto& h : obs.ops()) {
    const double gap = states::expectation(rho, h) - states::expectation(sigma, h);
    acc += gap * gap;
  }
  return 0.5 * acc;
}

sdp::CouplingProgram make_dpt_program(const DensityMatrix& rho,
                                      const DensityMatrix& sigma,
                                      const ObservableSet& obs,
                                      Formulation formulation, Cone cone) {
  require_same_dim(rho, sigma);
  require_obs_dim(rho, obs);
  const int d = rho.dim();
  const Matrix id = Matrix::identity(d);

  sdp::CouplingProgram prog;
  prog.sense = sdp::Sense::Minimize;
  prog.party_dims = {d, d};
  Matrix cost(d * d, d * d);
  for (const auto& h : obs.ops()) {
    const Matrix hl = formulation == Formulation::Dpt ? h.transpose() : h;
    Matrix k = linalg::kron(hl, id) - linalg::kron(id, h);
    cost += 0.5 * (k * k);
  }
  cost.hermitize();
  prog.cost = std::move(cost);
  if (formulation == Formulation::Dpt) {
    prog.marginals.push_back({{0}, sigma.matrix(), false});
    prog.marginals.push_back({{1}, rho.matrix(), true});
  } else {
    prog.marginals.push_back({{0}, rho.matrix(), false});
    prog.marginals.push_back({{1}, sigma.matrix(), false});
  }
  if (cone == Cone::Ppt) prog.ppt_cuts.push_back({0});
  return prog;
}

sdp::CouplingProgram make_swap_program(const DensityMatrix& rho,
                                       const DensityMatrix& sigma, Cone cone) {
  require_same_dim(rho, sigma);
  const int d = rho.dim();
  sdp::CouplingProgram prog;
  prog.sense = sdp::Sense::Maximize;
  prog.party_dims = {d, d};
  prog.cost = linalg::swap_operator(d);
  prog.marginals.push_back({{0}, rho.matrix(), false});
  prog.marginals.push_back({{1}, sigma.matrix(), false});
  if (cone == Cone::Ppt) prog.ppt_cuts.push_back({0});
  return prog;
}

DistanceReport dpt_distance_sq(const DensityMatrix& rho,
                               const DensityMatrix& sigma,
                               const ObservableSet& obs,
                               Formulation formulation, Cone cone,
                               const sdp::SolverSettings& settings) {
  const auto prog = make_dpt_program(rho, sigma, obs, formulation, cone);
  const auto r = sdp::solve(prog, settings);
  const BoundKind kind =
      cone == Cone::All ? BoundKind::Exact : ppt_min_kind(rho.dim());
  std::string method = formulation == Formulation::Dpt ? "sdp:dpt" : "sdp:gmpc";
  method += cone == Cone::Ppt ? ":ppt" : ":all";
  return report_from_solve(r, kind, std::move(method));
}

DistanceReport self_distance_sq(const DensityMatrix& rho,
                                const ObservableSet& obs, Cone cone,
                                const sdp::SolverSettings& settings) {
  require_obs_dim(rho, obs);
  if (cone == Cone::All) {
    double acc = 0.0;
    for (const auto& h : obs.ops()) acc += skew_information(rho, h);
    return closed_form(acc, "closed:skew-sum");
  }
  if (obs.size() == 1)
    return closed_form(0.25 * qfi(rho, obs.op(0)), "closed:qfi/4");
  if (obs.full_set())
    return closed_form(2.0 * (rho.dim() - 1.0), "closed:2(d-1)");
  auto rep = dpt_distance_sq(rho, rho, obs, Formulation::Dpt, Cone::Ppt, settings);
  rep.method = "sdp:self:ppt";
  return rep;
}

DistanceReport modified_dpt_sq(const DensityMatrix& rho,
                               const DensityMatrix& sigma,
                               const ObservableSet& obs, Cone cone,
                               const sdp::SolverSettings& settings) {
  const auto dist =
      dpt_distance_sq(rho, sigma, obs, Formulation::Dpt, cone, settings);
  const auto self_r = self_distance_sq(rho, obs, cone, settings);
  const auto self_s = self_distance_sq(sigma, obs, cone, settings);
  const double shift = 0.5 * (self_r.value + self_s.value);

  DistanceReport rep = affine_of(dist, 1.0, -shift);
  const double raw = rep.value;
  if (raw < -1e-6)
    throw std::runtime_error(
        "modified_dpt_sq: value below the self-distance lower bound by " +
        std::to_string(-raw) + "; solver failure");
  rep.value = std::max(0.0, raw);
  rep.interval[0] = std::max(0.0, rep.interval[0]);
  rep.interval[1] = std::max(rep.interval[0], rep.interval[1]);
  if (rep.bound_kind != BoundKind::Interval)
    rep.bound_kind = cone == Cone::All ? BoundKind::Exact : ppt_min_kind(rho.dim());
  rep.method = "modified:" + dist.method;
  return rep;
}

DistanceReport swap_fidelity(const DensityMatrix& rho,
                             const DensityMatrix& sigma, Cone cone,
                             const sdp::SolverSettings& settings) {
  const auto prog = make_swap_program(rho, sigma, cone);
  const auto r = sdp::solve(prog, settings);
  const BoundKind kind =
      cone == Cone::All ? BoundKind::Exact : ppt_max_kind(rho.dim());
  return report_from_solve(r, kind,
                           cone == Cone::Ppt ? "sdp:swapfid:ppt" : "sdp:swapfid:all");
}

DistanceReport swap_distance_sq(const DensityMatrix& rho,
                                const DensityMatrix& sigma, Cone cone,
                                const sdp::SolverSettings& settings) {
  DistanceReport rep = affine_of(swap_fidelity(rho, sigma, cone, settings), -0.5, 0.5);
  rep.method = "derived:(1-swapfid)/2" + std::string(cone == Cone::Ppt ? ":ppt" : ":all");
  return rep;
}

DistanceReport bsf_distance_sq(const DensityMatrix& rho,
                               const DensityMatrix& sigma,
                               const sdp::SolverSettings& settings) {
  DistanceReport rep =
      affine_of(swap_fidelity(rho, sigma, Cone::Ppt, settings), -1.0, 1.0);
  rep.method = "derived:1-swapfid:ppt";
  return rep;
}

DistanceReport decomp_distance_sq(const DensityMatrix& rho,
                                  const DensityMatrix& sigma,
                                  const ObservableSet& obs,
                                  const sdp::SolverSettings& settings) {
  require_same_dim(rho, sigma);
  require_obs_dim(rho, obs);
  if (obs.size() <= 2)
    return closed_form(euclid_sq(rho, sigma, obs), "closed:euclid");
  if (obs.full_set()) {
    DistanceReport rep =
        affine_of(swap_fidelity(rho, sigma, Cone::Ppt, settings), -2.0, 2.0);
    rep.method = "derived:2(1-swapfid):ppt";
    return rep;
  }
  // No exact route for a generic set: bracket between the expectation-
  // value distance and the modified transport distance.
  DistanceReport rep;
  const double lo = euclid_sq(rho, sigma, obs);
  const auto upper = modified_dpt_sq(rho, sigma, obs, Cone::Ppt, settings);
  rep.bound_kind = BoundKind::Interval;
  rep.interval = {std::min(lo, upper.value), std::max(lo, upper.value)};
  rep.value = rep.interval[1];
  rep.method = "interval:[euclid,modified-ppt]";
  rep.diag = upper.diag;
  return rep;
}

double decomp_upper_bound(const DensityMatrix& rho, const DensityMatrix& sigma,
                          const ObservableSet& obs) {
  require_same_dim(rho, sigma);
  require_obs_dim(rho, obs);
  const auto dec = states::eigen_decomposition_of_state(rho);
  double acc = 0.0;
  for (std::size_t k = 0; k < dec.weights.size(); ++k)
    acc += dec.weights[k] * delta_sq(dec.left[k].projector(), sigma, obs);
  return acc;
}

namespace {

sdp::CouplingProgram make_p2_program(const DensityMatrix& rho,
                                     const DensityMatrix& sigma,
                                     bool enforce_symmetric) {
  const int d = rho.dim();
  const int p = 2;
  sdp::CouplingProgram prog;
  prog.party_dims.assign(2 * p, d);
  for (int k = 0; k < p; ++k) prog.marginals.push_back({{k}, rho.matrix(), false});
  for (int k = p; k < 2 * p; ++k)
    prog.marginals.push_back({{k}, sigma.matrix(), false});
  prog.ppt_cuts.push_back({0, 1});
  for (int k = 0; k < 2 * p; ++k) prog.ppt_cuts.push_back({k});
  if (enforce_symmetric) {
    prog.symmetric_blocks.push_back({0, 1});
    prog.symmetric_blocks.push_back({2, 3});
  }
  return prog;
}

void check_p2_guard(const DensityMatrix& rho, const DensityMatrix& sigma, int p) {
  require_same_dim(rho, sigma);
  if (p != 2) throw std::invalid_argument("only p = 2 is supported");
  long total = 1;
  for (int i = 0; i < 2 * p; ++i) total *= rho.dim();
  require(total <= 16, "p = 2 programs require total dimension d^(2p) <= 16");
}

}  // namespace

DistanceReport p_swap_fidelity(const DensityMatrix& rho,
                               const DensityMatrix& sigma, int p,
                               bool enforce_symmetric,
                               const sdp::SolverSettings& settings) {
  check_p2_guard(rho, sigma, p);
  const int d = rho.dim();
  auto prog = make_p2_program(rho, sigma, enforce_symmetric);
  prog.sense = sdp::Sense::Maximize;
  prog.cost = linalg::swap_operator(d * d);  // block swap (1..p | p+1..2p)
  const auto r = sdp::solve(prog, settings);
  return report_from_solve(r, BoundKind::UpperBound, "sdp:pswap2:ppt");
}

DistanceReport bsf_p_distance_sq(const DensityMatrix& rho,
                                 const DensityMatrix& sigma, int p,
                                 const sdp::SolverSettings& settings) {
  check_p2_guard(rho, sigma, p);
  const int d = rho.dim();
  auto prog = make_p2_program(rho, sigma, true);
  prog.sense = sdp::Sense::Minimize;
  const Matrix one_minus_s =
      Matrix::identity(d * d) - linalg::swap_operator(d);
  Matrix o = linalg::lift_onto_parties(one_minus_s, prog.party_dims, {0, 2}) *
             linalg::lift_onto_parties(one_minus_s, prog.party_dims, {1, 3});
  o.hermitize();
  prog.cost = std::move(o);
  const auto r = sdp::solve(prog, settings);

  // The operator form integrates (1-|<psi|phi>|^2)^p on pure products,
  // which is the p-sum convention with exponent p rather than p/2. Report
  // m^(2/p) as the literal operator value and [m^(2/p), m^(1/p)] to span
  // the two exponent conventions.
  const double m = std::max(0.0, r.value);
  DistanceReport rep;
  rep.value = std::pow(m, 2.0 / p);
  rep.interval = {rep.value, std::pow(m, 1.0 / p)};
  if (rep.interval[0] > rep.interval[1])
    std::swap(rep.interval[0], rep.interval[1]);
  rep.bound_kind = BoundKind::Interval;
  rep.method = "sdp:bsf-p2:ppt[m^(2/p),m^(1/p)]";
  rep.diag = diag_of(r);
  if (r.status != sdp::SolveStatus::Infeasible)
    rep.coupling = states::DensityMatrix::from_solver(r.optimizer);
  return rep;
}

double fidelity_second_derivative(const DensityMatrix& rho, const Matrix& h,
                                  double step) {
  require(step >= 1e-3 && step <= 1e-1,
          "fidelity_second_derivative: step must be in [1e-3, 1e-1]");
  require(h.is_square() && h.rows() == rho.dim(),
          "fidelity_second_derivative: dimension mismatch");
  const double fp = uhlmann_fidelity(rho, states::evolve(rho, h, step));
  const double fm = uhlmann_fidelity(rho, states::evolve(rho, h, -step));
  return (fp + fm - 2.0) / (step * step);
}

}  // namespace qot::metrics
