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

#include "qot/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "qot/json_io.hpp"
#include "qot/linalg.hpp"

namespace qot::cli {

using metrics::Cone;
using metrics::Formulation;
using metrics::ObservableSet;
using states::DensityMatrix;
using states::PureState;
using states::SeedSpec;

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

unsigned worker_count() {
  if (const char* env = std::getenv("QOT_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return unsigned(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  const unsigned workers = std::min<unsigned>(worker_count(), unsigned(n));
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

ObservableSet observables_for(const std::string& spec, int d) {
  if (spec == "su") return ObservableSet::su(d);
  if (spec == "z") {
    if (d == 2) {
      Matrix z(2, 2);
      z(0, 0) = 1.0;
      z(1, 1) = -1.0;
      return ObservableSet::single(std::move(z));
    }
    return ObservableSet::single(linalg::jz_operator(d));
  }
  if (spec.rfind("file:", 0) == 0)
    return ObservableSet::from_list(io::load_observables(spec.substr(5)));
  throw std::invalid_argument("unknown observable spec: " + spec);
}

sdp::SolverSettings solver_settings_for(const ExperimentConfig& cfg) {
  sdp::SolverSettings s;
  if (cfg.solver_tol) {
    s.tol_primal = *cfg.solver_tol;
    s.tol_dual = *cfg.solver_tol;
  }
  s.max_iter = cfg.max_iter;
  return s;
}

void run_scatter(const ExperimentConfig& cfg, std::ostream& csv) {
  if (cfg.d < 2) throw std::invalid_argument("scatter: d must be >= 2");
  if (cfg.samples < 1) throw std::invalid_argument("scatter: n must be >= 1");
  const auto settings = solver_settings_for(cfg);
  std::vector<std::string> rows(cfg.samples);
  parallel_for(cfg.samples, [&](int i) {
    const DensityMatrix rho =
        states::random_density_hs(cfg.d, {cfg.seed, std::uint64_t(2 * i)});
    const DensityMatrix sigma =
        states::random_density_hs(cfg.d, {cfg.seed, std::uint64_t(2 * i + 1)});
    const double f = metrics::uhlmann_fidelity(rho, sigma);
    const double fs =
        metrics::swap_fidelity(rho, sigma, Cone::Ppt, settings).value;
    rows[i] = std::to_string(i) + "," + fmt12(f) + "," + fmt12(fs);
  });
  csv << "index,F,FS_ppt\n";
  for (const auto& r : rows) csv << r << "\n";
}

void run_dynamics(const ExperimentConfig& cfg, std::ostream& csv) {
  if (cfg.d < 2) throw std::invalid_argument("dynamics: d must be >= 2");
  if (!(cfg.thetas.step > 0.0) || cfg.thetas.stop < cfg.thetas.start)
    throw std::invalid_argument("dynamics: bad theta grid");
  const auto settings = solver_settings_for(cfg);
  const ObservableSet obs = observables_for(cfg.obs_spec, cfg.d);
  const Matrix& h = obs.op(0);
  const DensityMatrix rho = states::random_density_hs(cfg.d, {cfg.seed, 0});

  const int count =
      int((cfg.thetas.stop - cfg.thetas.start) / cfg.thetas.step + 1e-9) + 1;
  std::vector<std::string> rows(count);
  parallel_for(count, [&](int i) {
    const double theta = cfg.thetas.start + i * cfg.thetas.step;
    const DensityMatrix rho_t = states::evolve(rho, h, theta);
    const double f = metrics::uhlmann_fidelity(rho, rho_t);
    const double fs =
        metrics::swap_fidelity(rho, rho_t, Cone::Ppt, settings).value;
    rows[i] = fmt12(theta) + "," + fmt12(f) + "," + fmt12(fs);
  });

  // Central second differences at theta = 0, taken with the grid step
  // (clamped to the supported finite-difference window).
  const double step = std::min(0.1, std::max(1e-3, cfg.thetas.step));
  const double d2f = metrics::fidelity_second_derivative(rho, h, step);
  double fsp[2];
  parallel_for(2, [&](int s) {
    const double theta = (s == 0 ? step : -step);
    fsp[s] = metrics::swap_fidelity(rho, states::evolve(rho, h, theta),
                                    Cone::Ppt, settings)
                 .value;
  });
  const double d2fs = (fsp[0] + fsp[1] - 2.0) / (step * step);
  const double ref = -0.5 * metrics::qfi(rho, h);

  csv << "theta,F,FS_ppt\n";
  for (const auto& r : rows) csv << r << "\n";
  csv << "# d2F," << fmt12(d2f) << ",d2FS_ppt," << fmt12(d2fs)
      << ",minus_qfi_over_2," << fmt12(ref) << "\n";
}

namespace {

VerificationRecord rec_le(std::string name, double lhs, double rhs, double tol,
                          std::uint64_t seed, int d, bool assertable = true) {
  VerificationRecord r;
  r.check = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.pass = r.margin >= -tol;
  r.seed = seed;
  r.dimension = d;
  r.assertable = assertable;
  return r;
}

VerificationRecord rec_eq(std::string name, double lhs, double rhs, double tol,
                          std::uint64_t seed, int d, bool assertable = true) {
  VerificationRecord r;
  r.check = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = -std::abs(lhs - rhs);
  r.pass = r.margin >= -tol;
  r.seed = seed;
  r.dimension = d;
  r.assertable = assertable;
  return r;
}

DensityMatrix appendix_mixed() {
  Matrix m = Matrix::identity(2);
  m *= Cplx(0.5, 0.0);
  return DensityMatrix(std::move(m));
}

void appendix_records(const sdp::SolverSettings& settings,
                      std::vector<VerificationRecord>& out) {
  const DensityMatrix rho = appendix_mixed();
  const DensityMatrix sigma = PureState::basis_state(2, 0).projector();
  Matrix z(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  const ObservableSet obs = ObservableSet::single(std::move(z));

  const auto dist = metrics::dpt_distance_sq(rho, sigma, obs, Formulation::Dpt,
                                             Cone::Ppt, settings);
  out.push_back(rec_eq("appendixA_dpt_ppt", dist.value, 1.0, 1e-4, 0, 2));
  const auto mod =
      metrics::modified_dpt_sq(rho, sigma, obs, Cone::Ppt, settings);
  out.push_back(rec_eq("appendixA_modified_ppt", mod.value, 1.0, 1e-4, 0, 2));
  const auto dec = metrics::decomp_distance_sq(rho, sigma, obs, settings);
  out.push_back(rec_eq("appendixA_decomp", dec.value, 0.5, 1e-12, 0, 2));
}

}  // namespace

VerifySummary run_verify(const ExperimentConfig& cfg,
                         std::vector<VerificationRecord>& records) {
  if (cfg.d < 2) throw std::invalid_argument("verify: d must be >= 2");
  if (cfg.samples < 1) throw std::invalid_argument("verify: n must be >= 1");
  const int d = cfg.d;
  const auto settings = solver_settings_for(cfg);
  const ObservableSet su = ObservableSet::su(d);
  const ObservableSet zset = observables_for("z", d);

  std::vector<VerificationRecord> fixed;
  appendix_records(settings, fixed);

  std::vector<std::vector<VerificationRecord>> blocks(cfg.samples);
  parallel_for(cfg.samples, [&](int i) {
    auto& out = blocks[i];
    const std::uint64_t seed = cfg.seed;
    const std::uint64_t base = std::uint64_t(i) * 64;
    const DensityMatrix rho = states::random_density_hs(d, {seed, base + 0});
    const DensityMatrix sigma = states::random_density_hs(d, {seed, base + 1});
    const PureState psi = states::random_pure(d, {seed, base + 2});
    const PureState phi = states::random_pure(d, {seed, base + 3});
    const DensityMatrix psi_dm = psi.projector();
    const DensityMatrix phi_dm = phi.projector();

    // Fidelity chain F <= FS_ppt <= FS_all <= sqrt(F), plus the qubit
    // equalities with the Uhlmann-Jozsa fidelity and the superfidelity.
    const double f = metrics::uhlmann_fidelity(rho, sigma);
    const double fs_ppt =
        metrics::swap_fidelity(rho, sigma, Cone::Ppt, settings).value;
    const double fs_all =
        metrics::swap_fidelity(rho, sigma, Cone::All, settings).value;
    out.push_back(rec_le("chain_F_le_FSppt", f, fs_ppt, 1e-5, seed, d));
    out.push_back(rec_le("chain_FSppt_le_FSall", fs_ppt, fs_all, 1e-5, seed, d));
    out.push_back(
        rec_le("chain_FSall_le_sqrtF", fs_all, std::sqrt(f), 1e-5, seed, d));
    out.push_back(rec_le("swapfid_ppt_nonneg", 0.0, fs_ppt, 1e-6, seed, d));
    if (d == 2) {
      out.push_back(rec_eq("qubit_FSppt_eq_F", fs_ppt, f, 1e-5, seed, d));
      out.push_back(rec_eq("qubit_superfid_eq_F",
                           metrics::superfidelity(rho, sigma), f, 1e-9, seed, d));
    }

    // Transport distances over the full generator set.
    const auto d_ppt = metrics::dpt_distance_sq(rho, sigma, su,
                                                Formulation::Dpt, Cone::Ppt,
                                                settings);
    const auto d_all = metrics::dpt_distance_sq(rho, sigma, su,
                                                Formulation::Dpt, Cone::All,
                                                settings);
    const auto g_ppt = metrics::dpt_distance_sq(rho, sigma, su,
                                                Formulation::Gmpc, Cone::Ppt,
                                                settings);
    out.push_back(rec_le("dpt_all_le_dpt_ppt", d_all.value, d_ppt.value, 2e-5,
                         seed, d));
    out.push_back(
        rec_eq("gmpc_ppt_eq_dpt_ppt", g_ppt.value, d_ppt.value, 2e-5, seed, d));
    out.push_back(rec_eq("fullset_dpt_ppt_eq_2d_minus_2FSppt", d_ppt.value,
                         2.0 * d - 2.0 * fs_ppt, 2e-5, seed, d));
    if (d == 2)
      out.push_back(rec_le("fullset_dpt_ppt_ge_2dm2", 2.0 * (d - 1.0),
                           d_ppt.value, 1e-5, seed, d));

    // Self-distance bound with a single observable (closed-form selfs).
    const auto dz_ppt = metrics::dpt_distance_sq(
        rho, sigma, zset, Formulation::Dpt, Cone::Ppt, settings);
    const double selfs_z =
        0.125 * (metrics::qfi(rho, zset.op(0)) + metrics::qfi(sigma, zset.op(0)));
    out.push_back(
        rec_le("selfdist_bound_z", selfs_z, dz_ppt.value, 1e-5, seed, d));

    // Pure-pair identities.
    const double overlap2 = std::norm(psi.overlap(phi));
    out.push_back(rec_eq("lemma1_pure_euclid",
                         metrics::euclid_sq(psi_dm, phi_dm, su),
                         2.0 * (1.0 - overlap2), 1e-10, seed, d));
    const double dd = metrics::delta_sq(psi_dm, phi_dm, su);
    for (const auto& [form, cone, name] :
         {std::tuple{Formulation::Dpt, Cone::All, "pure_pair_dpt_all"},
          std::tuple{Formulation::Dpt, Cone::Ppt, "pure_pair_dpt_ppt"},
          std::tuple{Formulation::Gmpc, Cone::All, "pure_pair_gmpc_all"},
          std::tuple{Formulation::Gmpc, Cone::Ppt, "pure_pair_gmpc_ppt"}}) {
      const auto rep = metrics::dpt_distance_sq(psi_dm, phi_dm, su, form, cone,
                                                settings);
      out.push_back(rec_eq(name, rep.value, dd, 1e-4, seed, d));
    }

    // Pure first argument saturates the fidelity chain.
    const double fpure = metrics::uhlmann_fidelity(psi_dm, sigma);
    const double fsp_pure =
        metrics::swap_fidelity(psi_dm, sigma, Cone::Ppt, settings).value;
    const double fsa_pure =
        metrics::swap_fidelity(psi_dm, sigma, Cone::All, settings).value;
    out.push_back(
        rec_eq("pure_saturation_FSppt_eq_F", fsp_pure, fpure, 1e-5, seed, d));
    out.push_back(
        rec_eq("pure_saturation_FSall_eq_F", fsa_pure, fpure, 1e-5, seed, d));
    out.push_back(rec_eq("bsf_pure_rho", 1.0 - fsp_pure,
                         1.0 - states::expectation(sigma, psi_dm.matrix()),
                         1e-5, seed, d));
    if (d == 2)
      out.push_back(rec_eq("bsf_qubit_eq_1_minus_F", 1.0 - fs_ppt, 1.0 - f,
                           1e-5, seed, d));

    // Modified-distance ordering: proven for a pure first argument,
    // conjectured (informational) for mixed pairs.
    const auto mod_ppt_pure =
        metrics::modified_dpt_sq(psi_dm, sigma, zset, Cone::Ppt, settings);
    const auto mod_all_pure =
        metrics::modified_dpt_sq(psi_dm, sigma, zset, Cone::All, settings);
    out.push_back(rec_le("modified_pure_ordering", mod_ppt_pure.value,
                         mod_all_pure.value, 1e-5, seed, d));
    const auto mod_ppt_z =
        metrics::modified_dpt_sq(rho, sigma, zset, Cone::Ppt, settings);
    const auto mod_all_z =
        metrics::modified_dpt_sq(rho, sigma, zset, Cone::All, settings);
    out.push_back(rec_le("conjecture1_modified_ordering_z", mod_ppt_z.value,
                         mod_all_z.value, 1e-5, seed, d, false));
    const auto mod_ppt_su =
        metrics::modified_dpt_sq(rho, sigma, su, Cone::Ppt, settings);
    const auto mod_all_su =
        metrics::modified_dpt_sq(rho, sigma, su, Cone::All, settings);
    out.push_back(rec_le("conjecture1_modified_ordering_su", mod_ppt_su.value,
                         mod_all_su.value, 1e-5, seed, d, false));

    // Information quantities.
    out.push_back(rec_le("skew_le_qfi_over_4",
                         metrics::skew_information(rho, zset.op(0)),
                         0.25 * metrics::qfi(rho, zset.op(0)), 1e-10, seed, d));
    out.push_back(rec_le("skew_nonneg", 0.0,
                         metrics::skew_information(rho, zset.op(0)), 1e-12,
                         seed, d));

    // Closed self-distance forms against the equal-marginal programs.
    const auto self_all_sdp = metrics::dpt_distance_sq(
        rho, rho, zset, Formulation::Dpt, Cone::All, settings);
    out.push_back(rec_eq("selfdist_all_eq_skew_sum", self_all_sdp.value,
                         metrics::skew_information(rho, zset.op(0)), 1e-4,
                         seed, d));
    const auto self_ppt_sdp = metrics::dpt_distance_sq(
        rho, rho, zset, Formulation::Dpt, Cone::Ppt, settings);
    out.push_back(rec_eq("selfdist_ppt_n1_eq_qfi_over_4", self_ppt_sdp.value,
                         0.25 * metrics::qfi(rho, zset.op(0)), 1e-4, seed, d));

    // Decomposition-based distance.
    const auto dec = metrics::decomp_distance_sq(rho, sigma, su, settings);
    out.push_back(rec_le("fullset_decomp_le_2", dec.value, 2.0, 1e-6, seed, d));
    out.push_back(rec_le("decomp_upper_bound_ge_dpt_ppt", d_ppt.value,
                         metrics::decomp_upper_bound(rho, sigma, su), 1e-5,
                         seed, d));

    // Triangle inequality through a pure middle state (qubit closed
    // forms make the decomposition distance exact here).
    if (d == 2) {
      const PureState omega = states::random_pure(d, {seed, base + 4});
      const DensityMatrix tau = states::random_density_hs(d, {seed, base + 5});
      const DensityMatrix om_dm = omega.projector();
      const double ab =
          metrics::decomp_distance_sq(rho, om_dm, su, settings).value;
      const double bc =
          metrics::decomp_distance_sq(om_dm, tau, su, settings).value;
      const double ac =
          metrics::decomp_distance_sq(rho, tau, su, settings).value;
      out.push_back(rec_le("triangle_pure_middle",
                           std::sqrt(std::max(0.0, ac)),
                           std::sqrt(std::max(0.0, ab)) +
                               std::sqrt(std::max(0.0, bc)),
                           1e-7, seed, d));
    }

    // p = 2 programs (16-dimensional couplings; kept to a few samples).
    if (d == 2 && i < 10) {
      const auto ps =
          metrics::p_swap_fidelity(psi_dm, phi_dm, 2, true, settings);
      out.push_back(rec_eq("pswap2_pure_overlap4", ps.value,
                           overlap2 * overlap2, 1e-4, seed, d));
    }
    if (d == 2 && i < 5) {
      const auto with_sym =
          metrics::p_swap_fidelity(rho, sigma, 2, true, settings);
      const auto no_sym =
          metrics::p_swap_fidelity(rho, sigma, 2, false, settings);
      out.push_back(rec_eq("pswap2_symmetric_invariance", with_sym.value,
                           no_sym.value, 2e-4, seed, d));
      const auto bp = metrics::bsf_p_distance_sq(psi_dm, phi_dm, 2, settings);
      out.push_back(rec_eq("bsfp2_pure_integrand", bp.value,
                           (1.0 - overlap2) * (1.0 - overlap2), 1e-4, seed, d));
    }
  });

  records.clear();
  records.insert(records.end(), fixed.begin(), fixed.end());
  for (auto& b : blocks)
    records.insert(records.end(), b.begin(), b.end());

  VerifySummary sum;
  for (const auto& r : records) {
    if (r.assertable) {
      ++sum.assertable_total;
      if (!r.pass) ++sum.assertable_failed;
    } else {
      ++sum.informational_total;
      if (!r.pass) ++sum.informational_violations;
    }
  }
  return sum;
}

void write_verify_csv(const std::vector<VerificationRecord>& records,
                      std::ostream& csv) {
  csv << "check,lhs,rhs,margin,pass,seed,dimension\n";
  for (const auto& r : records) {
    csv << r.check << "," << fmt12(r.lhs) << "," << fmt12(r.rhs) << ","
        << fmt12(r.margin) << "," << (r.pass ? 1 : 0) << "," << r.seed << ","
        << r.dimension << "\n";
  }
}

}  // namespace qot::cli
