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

// qot: quantum optimal transport distances, fidelities and verification
// experiments over density matrices.
//
// Exit codes: 0 success, 1 verification failure, 2 malformed input,
// 3 solver non-convergence.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qot/experiments.hpp"
#include "qot/json_io.hpp"
#include "qot/linalg.hpp"

namespace {

using qot::Matrix;
using qot::cli::ExperimentConfig;
using qot::cli::fmt12;
using qot::metrics::BoundKind;
using qot::metrics::Cone;
using qot::metrics::DistanceReport;
using qot::metrics::Formulation;
using qot::metrics::ObservableSet;
using qot::states::DensityMatrix;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitSolverStall = 3;

const char* bound_kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::Exact: return "exact";
    case BoundKind::LowerBound: return "lower-bound";
    case BoundKind::UpperBound: return "upper-bound";
    case BoundKind::Interval: return "interval";
  }
  return "?";
}

void print_report(const DistanceReport& rep) {
  std::cout << "value " << fmt12(rep.value) << "\n";
  std::cout << "bound_kind " << bound_kind_name(rep.bound_kind) << "\n";
  if (rep.bound_kind == BoundKind::Interval)
    std::cout << "interval [" << fmt12(rep.interval[0]) << ", "
              << fmt12(rep.interval[1]) << "]\n";
  std::cout << "method " << rep.method << "\n";
  if (rep.diag.used_solver) {
    std::cout << "iterations " << rep.diag.iterations << "\n";
    std::cout << "primal_residual " << fmt12(rep.diag.primal_residual) << "\n";
    std::cout << "dual_residual " << fmt12(rep.diag.dual_residual) << "\n";
    std::cout << "gap " << fmt12(rep.diag.gap) << "\n";
  }
}

int report_exit(const DistanceReport& rep) {
  if (rep.diag.used_solver && rep.diag.status == qot::sdp::SolveStatus::MaxIter)
    return kExitSolverStall;
  return kExitOk;
}

struct OutStream {
  std::ofstream file;
  std::ostream* os = &std::cout;
};

bool open_out(const std::string& path, OutStream& out) {
  if (path.empty()) return true;
  out.file.open(path);
  if (!out.file) return false;
  out.os = &out.file;
  return true;
}

int cmd_distance(const std::string& kind, const std::string& rho_path,
                 const std::string& sigma_path, const std::string& obs_spec,
                 const ExperimentConfig& cfg) {
  const DensityMatrix rho = qot::io::load_state(rho_path);
  const DensityMatrix sigma = qot::io::load_state(sigma_path);
  if (rho.dim() != sigma.dim()) {
    std::cerr << "error: state dimensions differ\n";
    return kExitInputError;
  }
  const auto settings = qot::cli::solver_settings_for(cfg);
  auto obs = [&] { return qot::cli::observables_for(obs_spec, rho.dim()); };

  namespace m = qot::metrics;
  if (kind == "fidelity")
    std::cout << "value " << fmt12(m::uhlmann_fidelity(rho, sigma)) << "\n";
  else if (kind == "superfidelity")
    std::cout << "value " << fmt12(m::superfidelity(rho, sigma)) << "\n";
  else if (kind == "bures")
    std::cout << "value " << fmt12(m::bures_distance_sq(rho, sigma)) << "\n";
  else if (kind == "delta")
    std::cout << "value " << fmt12(m::delta_sq(rho, sigma, obs())) << "\n";
  else if (kind == "euclid")
    std::cout << "value " << fmt12(m::euclid_sq(rho, sigma, obs())) << "\n";
  else if (kind == "decomp-upper")
    std::cout << "value " << fmt12(m::decomp_upper_bound(rho, sigma, obs()))
              << "\n";
  else {
    DistanceReport rep;
    if (kind == "dpt-all")
      rep = m::dpt_distance_sq(rho, sigma, obs(), Formulation::Dpt, Cone::All,
                               settings);
    else if (kind == "dpt-ppt")
      rep = m::dpt_distance_sq(rho, sigma, obs(), Formulation::Dpt, Cone::Ppt,
                               settings);
    else if (kind == "gmpc-all")
      rep = m::dpt_distance_sq(rho, sigma, obs(), Formulation::Gmpc, Cone::All,
                               settings);
    else if (kind == "gmpc-ppt")
      rep = m::dpt_distance_sq(rho, sigma, obs(), Formulation::Gmpc, Cone::Ppt,
                               settings);
    else if (kind == "modified-all")
      rep = m::modified_dpt_sq(rho, sigma, obs(), Cone::All, settings);
    else if (kind == "modified-ppt")
      rep = m::modified_dpt_sq(rho, sigma, obs(), Cone::Ppt, settings);
    else if (kind == "swapfid-all")
      rep = m::swap_fidelity(rho, sigma, Cone::All, settings);
    else if (kind == "swapfid-ppt")
      rep = m::swap_fidelity(rho, sigma, Cone::Ppt, settings);
    else if (kind == "swapdist-all")
      rep = m::swap_distance_sq(rho, sigma, Cone::All, settings);
    else if (kind == "swapdist-ppt")
      rep = m::swap_distance_sq(rho, sigma, Cone::Ppt, settings);
    else if (kind == "bsf2")
      rep = m::bsf_distance_sq(rho, sigma, settings);
    else if (kind == "decomp")
      rep = m::decomp_distance_sq(rho, sigma, obs(), settings);
    else if (kind == "pswap2")
      rep = m::p_swap_fidelity(rho, sigma, 2, true, settings);
    else if (kind == "bsf-p2")
      rep = m::bsf_p_distance_sq(rho, sigma, 2, settings);
    else {
      std::cerr << "error: unknown --kind " << kind << "\n";
      return kExitInputError;
    }
    print_report(rep);
    return report_exit(rep);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum optimal transport distances and experiments"};
  app.require_subcommand(1);

  ExperimentConfig cfg;
  std::string kind, rho_path, sigma_path, cone_name = "ppt";
  double theta_start = 0.0, theta_step = 0.01, theta_stop = 0.1;
  double tol = 0.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--d", cfg.d, "qudit dimension");
    sub->add_option("--n", cfg.samples, "sample count");
    sub->add_option("--seed", cfg.seed, "RNG seed");
    sub->add_option("--obs", cfg.obs_spec, "observables: su | z | file:PATH");
    sub->add_option("--tol", tol, "solver primal/dual tolerance");
    sub->add_option("--out", cfg.out_path, "output CSV path (default stdout)");
    sub->add_option("--max-iter", cfg.max_iter, "solver iteration cap");
  };

  CLI::App* dist = app.add_subcommand("distance", "distance/fidelity of two states");
  dist->add_option("--kind", kind,
                   "fidelity | superfidelity | bures | delta | euclid | "
                   "dpt-all | dpt-ppt | gmpc-all | gmpc-ppt | modified-all | "
                   "modified-ppt | swapfid-all | swapfid-ppt | swapdist-all | "
                   "swapdist-ppt | bsf2 | decomp | decomp-upper | pswap2 | "
                   "bsf-p2")
      ->required();
  dist->add_option("--rho", rho_path, "state JSON file")->required();
  dist->add_option("--sigma", sigma_path, "state JSON file")->required();
  add_common(dist);

  CLI::App* selfd = app.add_subcommand("selfdist", "self-distance of a state");
  selfd->add_option("--rho", rho_path, "state JSON file")->required();
  selfd->add_option("--cone", cone_name, "all | ppt");
  add_common(selfd);

  CLI::App* scatter = app.add_subcommand("scatter", "F vs FS_ppt for random pairs");
  add_common(scatter);

  CLI::App* dynamics = app.add_subcommand("dynamics", "F and FS_ppt along a unitary orbit");
  dynamics->add_option("--theta-start", theta_start, "grid start");
  dynamics->add_option("--theta-step", theta_step, "grid step");
  dynamics->add_option("--theta-stop", theta_stop, "grid stop");
  add_common(dynamics);

  CLI::App* verify = app.add_subcommand("verify", "run the relation verification suite");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  if (tol > 0.0) cfg.solver_tol = tol;
  cfg.thetas = {theta_start, theta_step, theta_stop};

  try {
    if (dist->parsed())
      return cmd_distance(kind, rho_path, sigma_path, cfg.obs_spec, cfg);

    if (selfd->parsed()) {
      const DensityMatrix rho = qot::io::load_state(rho_path);
      const ObservableSet obs =
          qot::cli::observables_for(cfg.obs_spec, rho.dim());
      const Cone cone = cone_name == "all" ? Cone::All : Cone::Ppt;
      if (cone_name != "all" && cone_name != "ppt") {
        std::cerr << "error: --cone must be all or ppt\n";
        return kExitInputError;
      }
      const auto rep = qot::metrics::self_distance_sq(
          rho, obs, cone, qot::cli::solver_settings_for(cfg));
      print_report(rep);
      return report_exit(rep);
    }

    OutStream out;
    if (!open_out(cfg.out_path, out)) {
      std::cerr << "error: cannot write " << cfg.out_path << "\n";
      return kExitInputError;
    }

    if (scatter->parsed()) {
      qot::cli::run_scatter(cfg, *out.os);
      return kExitOk;
    }
    if (dynamics->parsed()) {
      qot::cli::run_dynamics(cfg, *out.os);
      return kExitOk;
    }
    if (verify->parsed()) {
      std::vector<qot::cli::VerificationRecord> records;
      const auto sum = qot::cli::run_verify(cfg, records);
      qot::cli::write_verify_csv(records, *out.os);
      std::cout << "verify: " << (sum.assertable_total - sum.assertable_failed)
                << "/" << sum.assertable_total << " assertable checks passed; "
                << sum.informational_total << " informational rows with "
                << sum.informational_violations << " violations\n";
      return sum.assertable_failed == 0 ? kExitOk : kExitVerifyFailure;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
