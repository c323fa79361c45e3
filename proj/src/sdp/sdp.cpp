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

#include "qot/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qot/kernels.hpp"
#include "qot/linalg.hpp"

namespace qot::sdp {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::vector<int> complement(const std::vector<int>& parties, int n_parties) {
  std::vector<bool> in(n_parties, false);
  for (int p : parties) in[p] = true;
  std::vector<int> out;
  for (int p = 0; p < n_parties; ++p)
    if (!in[p]) out.push_back(p);
  return out;
}

}  // namespace

int CouplingProgram::dim() const {
  int n = 1;
  for (int d : party_dims) n *= d;
  return n;
}

std::vector<Constraint> marginal_constraints(
    const std::vector<int>& party_dims,
    const std::vector<MarginalSpec>& marginals) {
  require(!party_dims.empty(), "marginal_constraints: no parties");

  // Every marginal pins Tr(X) to the trace of its target; mismatched
  // targets make the system infeasible before it is even assembled.
  double tr0 = 0.0;
  bool have_tr = false;
  for (const auto& spec : marginals) {
    const double tr = spec.target.trace().real();
    if (!have_tr) {
      tr0 = tr;
      have_tr = true;
    } else {
      require(std::abs(tr - tr0) <= 1e-9,
              "marginal_constraints: marginal targets have mismatched traces");
    }
  }

  std::vector<Constraint> out;
  for (const auto& spec : marginals) {
    int dk = 1;
    for (int p : spec.kept_parties) {
      require(p >= 0 && p < int(party_dims.size()),
              "marginal_constraints: bad party index");
      dk *= party_dims[p];
    }
    require(spec.target.is_square() && spec.target.rows() == dk,
            "marginal_constraints: target dim mismatch");
    const Matrix t =
        spec.transpose_target ? spec.target.transpose() : spec.target;

    // Hermitian operator basis on the kept subspace, lifted to the full
    // space. Tr((e (x) I) X) = Tr(e Tr_rest X) = Tr(e t).
    for (int a = 0; a < dk; ++a) {
      Matrix e(dk, dk);
      e(a, a) = 1.0;
      out.push_back({linalg::lift_onto_parties(e, party_dims, spec.kept_parties),
                     t(a, a).real()});
    }
    for (int a = 0; a < dk; ++a)
      for (int b = a + 1; b < dk; ++b) {
        Matrix er(dk, dk);
        er(a, b) = 1.0;
        er(b, a) = 1.0;
        out.push_back(
            {linalg::lift_onto_parties(er, party_dims, spec.kept_parties),
             2.0 * t(a, b).real()});
        Matrix ei(dk, dk);
        ei(a, b) = Cplx(0.0, -1.0);
        ei(b, a) = Cplx(0.0, 1.0);
        // Tr(ei T) = i(T_ab - T_ba) = -2 Im T_ab.
        out.push_back(
            {linalg::lift_onto_parties(ei, party_dims, spec.kept_parties),
             -2.0 * t(a, b).imag()});
      }
  }
  return out;
}

std::vector<Constraint> all_constraints(const CouplingProgram& prog) {
  std::vector<Constraint> out =
      marginal_constraints(prog.party_dims, prog.marginals);
  for (const auto& block : prog.symmetric_blocks) {
    int dk = 1;
    for (int p : block) dk *= prog.party_dims[p];
    int d0 = prog.party_dims.empty() ? 0 : prog.party_dims[block.at(0)];
    const Matrix psym = linalg::symmetric_projector(d0, int(block.size()));
    require(psym.rows() == dk, "symmetric block parties must share one dim");
    out.push_back(
        {linalg::lift_onto_parties(psym, prog.party_dims, block), 1.0});
  }
  for (const auto& eq : prog.equalities) {
    require(eq.a.is_square() && eq.a.rows() == prog.dim(),
            "equality constraint dim mismatch");
    out.push_back(eq);
  }
  return out;
}

AffineSystem build_marginal_constraints(const CouplingProgram& prog) {
  const std::vector<Constraint> raw = all_constraints(prog);
  AffineSystem sys;
  sys.raw_count = int(raw.size());

  // Modified Gram-Schmidt with one reorthogonalization pass, carrying the
  // right-hand sides along. A raw constraint whose matrix part reduces to
  // ~zero is redundant; if its rhs residual does not also vanish the
  // system is inconsistent.
  const double drop_tol = 1e-9;
  const double incons_tol = 1e-8;
  for (const auto& c : raw) {
    Matrix r = c.a;
    double b = c.b;
    const double orig_norm = std::max(1.0, r.frob_norm());
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < sys.basis.size(); ++j) {
        const double coef = hs_dot(sys.basis[j], r);
        if (coef == 0.0) continue;
        kernels::active().axpy_re(-coef, sys.basis[j].data(), r.data(),
                                  r.size());
        b -= coef * sys.rhs[j];
      }
    }
    const double nrm = r.frob_norm();
    if (nrm <= drop_tol * orig_norm) {
      if (std::abs(b) > incons_tol * orig_norm) {
        sys.consistent = false;
        sys.inconsistency = std::max(sys.inconsistency, std::abs(b));
      }
      continue;
    }
    r *= Cplx(1.0 / nrm, 0.0);
    r.hermitize();
    sys.basis.push_back(std::move(r));
    sys.rhs.push_back(b / nrm);
  }
  return sys;
}

namespace {

// A rank-1 single-party marginal forces the coupling to factorize:
// Tr_rest(X) = |psi><psi| with X PSD implies X = |psi><psi| (x) Y with
// Y PSD and unit trace. The party can then be contracted out of the
// cost, the equalities, and the cuts exactly. Doing so is more than an
// optimization: the factorized feasible set has no Slater point in the
// full space, which is precisely where splitting methods crawl.
struct PresolveResult {
  CouplingProgram reduced;
  // (original party index, pure factor) pairs, plus the map from the
  // reduced party indices to the original ones.
  std::vector<std::pair<int, Matrix>> fixed;
  std::vector<int> orig_of_reduced;
  bool fully_determined = false;
  double value = 0.0;  // objective when fully determined
};

bool is_pure_target(const Matrix& t) {
  if (std::abs(t.trace().real() - 1.0) > 1e-9) return false;
  const double purity = hs_dot(t, t);
  return purity >= 1.0 - 1e-11;
}

void convert_symmetric_blocks(CouplingProgram& prog) {
  for (const auto& block : prog.symmetric_blocks) {
    int dk = 1;
    for (int p : block) dk *= prog.party_dims[p];
    const Matrix psym = linalg::symmetric_projector(
        prog.party_dims[block.at(0)], int(block.size()));
    require(psym.rows() == dk, "symmetric block parties must share one dim");
    prog.equalities.push_back(
        {linalg::lift_onto_parties(psym, prog.party_dims, block), 1.0});
  }
  prog.symmetric_blocks.clear();
}

// Tr_p(M (A_p (x) I)): the exact contraction of an operator against a
// fixed factor A on party p.
Matrix contract_party(const Matrix& m, const std::vector<int>& dims, int p,
                      const Matrix& a) {
  Matrix lifted = linalg::lift_onto_parties(a, dims, {p});
  Matrix prod = m * lifted;
  Matrix out = linalg::partial_trace(prod, dims, {p});
  out.hermitize();
  return out;
}

PresolveResult presolve_pure_marginals(const CouplingProgram& prog_in) {
  PresolveResult out;
  CouplingProgram prog = prog_in;
  std::vector<int> orig(prog.party_dims.size());
  for (std::size_t i = 0; i < orig.size(); ++i) orig[i] = int(i);

  for (;;) {
    int found = -1;
    Matrix factor;
    for (std::size_t s = 0; s < prog.marginals.size(); ++s) {
      const auto& spec = prog.marginals[s];
      if (spec.kept_parties.size() != 1) continue;
      const Matrix t =
          spec.transpose_target ? spec.target.transpose() : spec.target;
      if (!is_pure_target(t)) continue;
      // Bail out if another marginal shares this party.
      bool shared = false;
      for (std::size_t s2 = 0; s2 < prog.marginals.size(); ++s2) {
        if (s2 == s) continue;
        for (int q : prog.marginals[s2].kept_parties)
          shared = shared || q == spec.kept_parties[0];
      }
      if (shared) continue;
      found = int(s);
      factor = t;
      break;
    }
    if (found < 0) break;

    const int p = prog.marginals[found].kept_parties[0];
    if (!prog.symmetric_blocks.empty()) convert_symmetric_blocks(prog);

    CouplingProgram next;
    next.sense = prog.sense;
    next.cost = contract_party(prog.cost, prog.party_dims, p, factor);
    for (std::size_t i = 0; i < prog.party_dims.size(); ++i)
      if (int(i) != p) next.party_dims.push_back(prog.party_dims[i]);
    auto shift = [p](int q) { return q > p ? q - 1 : q; };
    for (std::size_t s = 0; s < prog.marginals.size(); ++s) {
      if (int(s) == found) continue;
      MarginalSpec spec = prog.marginals[s];
      for (int& q : spec.kept_parties) q = shift(q);
      next.marginals.push_back(std::move(spec));
    }
    for (const auto& eq : prog.equalities)
      next.equalities.push_back(
          {contract_party(eq.a, prog.party_dims, p, factor), eq.b});
    // The removed marginal normalized the trace; keep that explicit.
    if (!next.party_dims.empty()) {
      int n_rest = 1;
      for (int d : next.party_dims) n_rest *= d;
      next.equalities.push_back({Matrix::identity(n_rest), 1.0});
    }
    for (const auto& cut : prog.ppt_cuts) {
      std::vector<int> reduced_cut;
      for (int q : cut)
        if (q != p) reduced_cut.push_back(shift(q));
      if (!reduced_cut.empty()) next.ppt_cuts.push_back(std::move(reduced_cut));
    }

    out.fixed.push_back({orig[p], factor});
    orig.erase(orig.begin() + p);
    prog = std::move(next);
    if (prog.party_dims.empty()) {
      out.fully_determined = true;
      out.value = prog.cost(0, 0).real();
      break;
    }
  }
  out.reduced = std::move(prog);
  out.orig_of_reduced = std::move(orig);
  return out;
}

// Rebuild the full-space optimizer from the fixed pure factors and the
// reduced-space optimizer (identity-shaped when no parties remain).
Matrix embed_optimizer(const std::vector<int>& full_dims,
                       const std::vector<std::pair<int, Matrix>>& fixed,
                       const std::vector<int>& orig_of_reduced,
                       const Matrix& reduced_opt) {
  const int n_parties = int(full_dims.size());
  int n = 1;
  for (int d : full_dims) n *= d;
  std::vector<const Matrix*> factor_of(n_parties, nullptr);
  for (const auto& [p, f] : fixed) factor_of[p] = &f;
  std::vector<int> reduced_dims;
  for (int p : orig_of_reduced) reduced_dims.push_back(full_dims[p]);
  std::vector<int> reduced_slot(n_parties, -1);
  for (std::size_t i = 0; i < orig_of_reduced.size(); ++i)
    reduced_slot[orig_of_reduced[i]] = int(i);

  Matrix x(n, n);
  std::vector<int> ri(n_parties), ci(n_parties);
  std::vector<int> rr(reduced_dims.size()), cc(reduced_dims.size());
  for (int a = 0; a < n; ++a) {
    int tmp = a;
    for (int p = n_parties - 1; p >= 0; --p) {
      ri[p] = tmp % full_dims[p];
      tmp /= full_dims[p];
    }
    for (int b = 0; b < n; ++b) {
      tmp = b;
      for (int p = n_parties - 1; p >= 0; --p) {
        ci[p] = tmp % full_dims[p];
        tmp /= full_dims[p];
      }
      Cplx v = 1.0;
      for (int p = 0; p < n_parties && v != Cplx(0.0); ++p)
        if (factor_of[p] != nullptr) v *= (*factor_of[p])(ri[p], ci[p]);
      if (v == Cplx(0.0)) continue;
      if (!reduced_dims.empty()) {
        for (int p = 0; p < n_parties; ++p)
          if (reduced_slot[p] >= 0) {
            rr[reduced_slot[p]] = ri[p];
            cc[reduced_slot[p]] = ci[p];
          }
        int ra = 0, cb = 0;
        for (std::size_t i = 0; i < reduced_dims.size(); ++i) {
          ra = ra * reduced_dims[i] + rr[i];
          cb = cb * reduced_dims[i] + cc[i];
        }
        v *= reduced_opt(ra, cb);
      }
      x(a, b) = v;
    }
  }
  x.hermitize();
  return x;
}

// Projection onto {X : <G_j, X> = rhs_j} for an orthonormal basis.
void project_affine(const AffineSystem& sys, Matrix& x) {
  const auto& k = kernels::active();
  for (std::size_t j = 0; j < sys.basis.size(); ++j) {
    const double delta = sys.rhs[j] - k.dot_re(sys.basis[j].data(), x.data(), x.size());
    if (delta != 0.0)
      k.axpy_re(delta, sys.basis[j].data(), x.data(), x.size());
  }
}

Matrix initial_iterate(const CouplingProgram& prog) {
  // The product of the marginal targets is feasible (and exactly so)
  // whenever the kept sets partition the parties in order; otherwise fall
  // back to the maximally mixed state.
  const int n = prog.dim();
  std::vector<int> covered;
  bool ordered_partition = !prog.marginals.empty();
  for (const auto& spec : prog.marginals)
    for (int p : spec.kept_parties) covered.push_back(p);
  for (std::size_t i = 0; ordered_partition && i < covered.size(); ++i)
    ordered_partition = (covered[i] == int(i));
  ordered_partition =
      ordered_partition && covered.size() == prog.party_dims.size();

  if (ordered_partition) {
    Matrix x(1, 1);
    x(0, 0) = 1.0;
    for (const auto& spec : prog.marginals) {
      const Matrix t =
          spec.transpose_target ? spec.target.transpose() : spec.target;
      x = linalg::kron(x, t);
    }
    const double tr = x.trace().real();
    if (x.rows() == n && std::abs(tr) > 1e-12) {
      x *= Cplx(1.0 / tr, 0.0);
      // Rescale to the mandated total trace (targets are unit trace in
      // practice, so this is a no-op then).
      if (!prog.marginals.empty())
        x *= Cplx(prog.marginals[0].target.trace().real(), 0.0);
      x.hermitize();
      return x;
    }
  }
  Matrix x = Matrix::identity(n);
  x *= Cplx(1.0 / n, 0.0);
  return x;
}

struct PolishResult {
  bool ok = false;
  double lower = 0.0;
};

// Dual-feasible lower bound for the internal minimization problem:
// least-squares multipliers against the orthonormal basis, cone slacks
// estimated from the scaled duals, and a trace shift that makes the
// remaining slack PSD. Requires the identity to lie in the span of the
// affine basis (so the shift stays inside the dual feasible set).
PolishResult polish_dual(const CouplingProgram& prog, const AffineSystem& sys,
                         const Matrix& cost_int,
                         const std::vector<Matrix>& scaled_duals, double rho,
                         double trace_target, bool id_in_span) {
  PolishResult out;
  if (!id_in_span || trace_target <= 0.0) return out;
  const auto& k = kernels::active();

  Matrix r_target = cost_int;
  // scaled_duals[1] belongs to the PSD block, the later ones to PPT cuts.
  for (std::size_t c = 2; c < scaled_duals.size(); ++c) {
    Matrix s = scaled_duals[c] * rho;
    s.hermitize();
    s = linalg::partial_transpose(s, prog.party_dims, prog.ppt_cuts[c - 2]);
    s = linalg::psd_project(s);
    s = linalg::partial_transpose(s, prog.party_dims, prog.ppt_cuts[c - 2]);
    r_target -= s;
  }
  Matrix s0 = scaled_duals[1] * rho;
  s0.hermitize();
  s0 = linalg::psd_project(s0);

  Matrix ls = r_target - s0;
  double bound = 0.0;
  Matrix r0 = r_target;
  for (std::size_t j = 0; j < sys.basis.size(); ++j) {
    const double yj = k.dot_re(sys.basis[j].data(), ls.data(), ls.size());
    bound += yj * sys.rhs[j];
    k.axpy_re(-yj, sys.basis[j].data(), r0.data(), r0.size());
  }
  r0.hermitize();
  double mineig = 0.0;
  try {
    mineig = linalg::min_eigenvalue(r0);
  } catch (const std::exception&) {
    return out;
  }
  out.ok = true;
  out.lower = bound + std::min(0.0, mineig) * trace_target;
  return out;
}

}  // namespace

namespace {

SdpResult solve_reduced(const CouplingProgram& prog,
                        const SolverSettings& settings) {
  const int n = prog.dim();

  SdpResult res;
  res.optimizer = Matrix(n, n);

  const AffineSystem sys = build_marginal_constraints(prog);
  if (!sys.consistent) {
    res.status = SolveStatus::Infeasible;
    res.gap = sys.inconsistency;
    return res;
  }

  Matrix cost_int = prog.cost;
  if (prog.sense == Sense::Maximize) cost_int *= Cplx(-1.0, 0.0);
  cost_int.hermitize();

  // Identity-in-span data for the dual polish.
  std::vector<double> id_coeffs(sys.basis.size());
  double trace_target = 0.0;
  {
    Matrix idres = Matrix::identity(n);
    for (std::size_t j = 0; j < sys.basis.size(); ++j) {
      id_coeffs[j] = hs_dot(sys.basis[j], idres);
      trace_target += id_coeffs[j] * sys.rhs[j];
    }
  }
  Matrix idcheck = Matrix::identity(n);
  for (std::size_t j = 0; j < sys.basis.size(); ++j)
    kernels::active().axpy_re(-id_coeffs[j], sys.basis[j].data(),
                              idcheck.data(), idcheck.size());
  const bool id_in_span = idcheck.frob_norm() <= 1e-8 * std::sqrt(double(n));

  // Block 0 projects onto the affine subspace, block 1 onto the PSD
  // cone, blocks 2.. onto the PPT cones.
  const int m = 2 + int(prog.ppt_cuts.size());
  const double alpha = settings.relaxation;
  double rho = settings.penalty;

  Matrix z = initial_iterate(prog);
  Matrix zprev = z;
  std::vector<Matrix> ps(m, z);             // unrelaxed block projections
  std::vector<Matrix> xs(m, z);             // over-relaxed block values
  std::vector<Matrix> us(m, Matrix(n, n));  // scaled duals
  Matrix t(n, n);

  const auto& k = kernels::active();
  const double cnorm = cost_int.frob_norm();

  double best_lower = -1e300;
  bool have_polish = false;
  double r_norm = 0.0, s_norm = 0.0;
  long iter = 0;
  const long adapt_burnin = 10;

  for (iter = 1; iter <= settings.max_iter; ++iter) {
    zprev = z;

    for (int i = 0; i < m; ++i) {
      // t = Z - U_i, then project.
      t = z;
      k.axpy_re(-1.0, us[i].data(), t.data(), t.size());
      if (i == 0) {
        project_affine(sys, t);
      } else if (i == 1) {
        t.hermitize();
        t = linalg::psd_project(t);
      } else {
        const auto& cut = prog.ppt_cuts[i - 2];
        t.hermitize();
        t = linalg::partial_transpose(t, prog.party_dims, cut);
        t = linalg::psd_project(t);
        t = linalg::partial_transpose(t, prog.party_dims, cut);
      }
      ps[i] = t;
      // Over-relaxed block value used by the consensus and dual updates.
      xs[i] = t * alpha;
      k.axpy_re(1.0 - alpha, zprev.data(), xs[i].data(), xs[i].size());
    }

    // Z <- mean(Xhat_i + U_i) - C/(m rho)
    z = Matrix(n, n);
    for (int i = 0; i < m; ++i) {
      k.axpy_re(1.0, xs[i].data(), z.data(), z.size());
      k.axpy_re(1.0, us[i].data(), z.data(), z.size());
    }
    k.axpy_re(-1.0 / rho, cost_int.data(), z.data(), z.size());
    z *= Cplx(1.0 / m, 0.0);
    z.hermitize();

    for (int i = 0; i < m; ++i) {
      k.axpy_re(1.0, xs[i].data(), us[i].data(), us[i].size());
      k.axpy_re(-1.0, z.data(), us[i].data(), us[i].size());
    }

    // Primal residual: worst distance between a block projection and the
    // new consensus point. Dual residual: the consensus step scaled back.
    r_norm = 0.0;
    for (int i = 0; i < m; ++i) {
      double dist2 = 0.0;
      for (std::size_t e = 0; e < z.size(); ++e) {
        const Cplx d = ps[i].data()[e] - z.data()[e];
        dist2 += std::norm(d);
      }
      r_norm = std::max(r_norm, std::sqrt(dist2));
    }
    double dz2 = 0.0;
    for (std::size_t e = 0; e < z.size(); ++e) {
      const Cplx d = z.data()[e] - zprev.data()[e];
      dz2 += std::norm(d);
    }
    s_norm = rho * std::sqrt(double(m) * dz2);

    const bool at_check = (iter % settings.check_interval) == 0;
    const bool converged =
        r_norm <= settings.tol_primal && s_norm <= settings.tol_dual;

    if (at_check || converged) {
      const PolishResult pol = polish_dual(prog, sys, cost_int, us, rho,
                                           trace_target, id_in_span);
      if (pol.ok) {
        best_lower = std::max(best_lower, pol.lower);
        have_polish = true;
      }
      if (!converged && settings.adaptive_penalty && iter >= adapt_burnin &&
          (r_norm > 10.0 * settings.tol_primal ||
           s_norm > 10.0 * settings.tol_dual)) {
        if (r_norm > 10.0 * s_norm) {
          rho *= 2.0;
          for (auto& u : us) u *= Cplx(0.5, 0.0);
        } else if (s_norm > 10.0 * r_norm) {
          rho *= 0.5;
          for (auto& u : us) u *= Cplx(2.0, 0.0);
        }
        rho = std::clamp(rho, 1e-6, 1e6);
      }
    }
    if (converged) {
      res.status = SolveStatus::Converged;
      break;
    }
  }
  if (res.status != SolveStatus::Converged) {
    res.status = SolveStatus::MaxIter;
    iter = settings.max_iter;
  }

  const double value_int = hs_dot(cost_int, z);
  const double resid_slack =
      10.0 * std::max(1.0, cnorm) * std::max(r_norm, 1e-16);
  double lo_int, hi_int;
  hi_int = value_int + resid_slack;
  if (have_polish) {
    lo_int = std::min(best_lower, value_int);
  } else {
    lo_int = value_int - std::max(settings.tol_gap, resid_slack);
  }

  res.iterations = iter;
  res.primal_residual = r_norm;
  res.dual_residual = s_norm;
  res.gap = std::max(0.0, value_int - lo_int);
  res.optimizer = z;
  if (prog.sense == Sense::Maximize) {
    res.value = -value_int;
    res.value_interval = {-hi_int, -lo_int};
  } else {
    res.value = value_int;
    res.value_interval = {lo_int, hi_int};
  }
  return res;
}

}  // namespace

SdpResult solve(const CouplingProgram& prog, const SolverSettings& settings) {
  const int n = prog.dim();
  require(prog.cost.is_square() && prog.cost.rows() == n,
          "solve: cost dim mismatch");
  require(prog.cost.is_hermitian(1e-10 * std::max(1.0, prog.cost.max_abs())),
          "solve: cost not Hermitian");
  for (const auto& spec : prog.marginals)
    for (int p : spec.kept_parties)
      require(p >= 0 && p < int(prog.party_dims.size()),
              "solve: bad party index in marginal");

  const PresolveResult pre = presolve_pure_marginals(prog);
  if (pre.fully_determined) {
    SdpResult res;
    res.status = SolveStatus::Converged;
    res.value = pre.value;
    res.value_interval = {pre.value, pre.value};
    res.optimizer = embed_optimizer(prog.party_dims, pre.fixed,
                                    pre.orig_of_reduced, Matrix());
    return res;
  }

  SdpResult res = solve_reduced(pre.reduced, settings);
  if (!pre.fixed.empty() && res.status != SolveStatus::Infeasible)
    res.optimizer = embed_optimizer(prog.party_dims, pre.fixed,
                                    pre.orig_of_reduced, res.optimizer);
  return res;
}

ResidualReport verify_solution(const CouplingProgram& prog, const Matrix& x) {
  require(x.is_square() && x.rows() == prog.dim(),
          "verify_solution: dim mismatch");
  ResidualReport rep;
  const int n_parties = int(prog.party_dims.size());
  for (const auto& spec : prog.marginals) {
    const Matrix reduced = linalg::partial_trace(
        x, prog.party_dims, complement(spec.kept_parties, n_parties));
    const Matrix t =
        spec.transpose_target ? spec.target.transpose() : spec.target;
    rep.max_marginal_dev = std::max(rep.max_marginal_dev, max_abs_diff(reduced, t));
  }
  for (const auto& c : all_constraints(prog))
    rep.max_equality_dev =
        std::max(rep.max_equality_dev, std::abs(hs_dot(c.a, x) - c.b));
  rep.min_eig = linalg::min_eigenvalue(x);
  for (const auto& cut : prog.ppt_cuts)
    rep.min_ppt_eigs.push_back(linalg::min_eigenvalue(
        linalg::partial_transpose(x, prog.party_dims, cut)));
  rep.objective = hs_dot(prog.cost, x);
  return rep;
}

}  // namespace qot::sdp
