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

#ifndef QOT_EXPERIMENTS_HPP_
#define QOT_EXPERIMENTS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qot/metrics.hpp"

namespace qot::cli {

struct ThetaGrid {
  double start = 0.0;
  double step = 0.01;
  double stop = 0.1;
};

struct ExperimentConfig {
  int d = 2;
  int samples = 100;
  std::uint64_t seed = 1;
  std::string obs_spec = "z";  // "su" | "z" | "file:PATH"
  ThetaGrid thetas;
  std::optional<double> solver_tol;  // overrides tol_primal/tol_dual
  long max_iter = 200000;
  std::string out_path;  // empty = stdout
};

/// One line of the verification suite. pass <=> margin >= -tolerance;
/// margin is the satisfied slack (negative absolute deviation for
/// equality checks). Informational rows (assertable = false) never fail
/// the run.
struct VerificationRecord {
  std::string check;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool pass = true;
  std::uint64_t seed = 0;
  int dimension = 0;
  bool assertable = true;
};

struct VerifySummary {
  int assertable_total = 0;
  int assertable_failed = 0;
  int informational_total = 0;
  int informational_violations = 0;
};

/// Observable policy for the CLI: "z" is the Pauli z matrix at d = 2 and
/// the collective jz otherwise; "su" the full generator set; "file:PATH"
/// a JSON list of matrices.
metrics::ObservableSet observables_for(const std::string& spec, int d);

sdp::SolverSettings solver_settings_for(const ExperimentConfig& cfg);

/// Fidelity vs PPT swap-fidelity over random Hilbert-Schmidt pairs.
/// Writes rows "index,F,FS_ppt"; deterministic per (seed, sample count).
void run_scatter(const ExperimentConfig& cfg, std::ostream& csv);

/// F and FS_ppt along e^{-iH theta} for one random state; writes rows
/// "theta,F,FS_ppt" and a footer comment with the central second
/// differences of both at theta = 0 next to -qfi/2.
void run_dynamics(const ExperimentConfig& cfg, std::ostream& csv);

/// The full verification suite; returns the records and a summary.
VerifySummary run_verify(const ExperimentConfig& cfg,
                         std::vector<VerificationRecord>& records);

void write_verify_csv(const std::vector<VerificationRecord>& records,
                      std::ostream& csv);

/// Twelve significant digits, the CSV number format.
std::string fmt12(double v);

/// Worker count: QOT_THREADS when set, hardware concurrency otherwise.
unsigned worker_count();

/// Runs fn(0..n-1) on the worker pool; blocks until done. Exceptions in
/// workers are rethrown on the caller.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace qot::cli

#endif  // QOT_EXPERIMENTS_HPP_
