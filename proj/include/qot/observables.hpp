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

#ifndef QOT_OBSERVABLES_HPP_
#define QOT_OBSERVABLES_HPP_

#include <vector>

#include "qot/matrix.hpp"

namespace qot::metrics {

/// Ordered set {H_1..H_N} of Hermitian observables on one qudit. The
/// full-set flag (N = d^2-1 traceless generators with Tr(H_n H_m) =
/// 2 delta_nm, i.e. SU(d) generators) is verified at construction and
/// never taken on trust.
class ObservableSet {
 public:
  static ObservableSet single(Matrix h);
  static ObservableSet from_list(std::vector<Matrix> hs);
  /// The generalized Gell-Mann set; full_set() is true by construction.
  static ObservableSet su(int d);

  int dim() const { return dim_; }
  std::size_t size() const { return ops_.size(); }
  const Matrix& op(std::size_t n) const { return ops_[n]; }
  const std::vector<Matrix>& ops() const { return ops_; }
  bool full_set() const { return full_; }

 private:
  ObservableSet(std::vector<Matrix> ops, int dim);
  std::vector<Matrix> ops_;
  int dim_ = 0;
  bool full_ = false;
};

}  // namespace qot::metrics

#endif  // QOT_OBSERVABLES_HPP_
