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

#include "qot/observables.hpp"

#include <cmath>
#include <stdexcept>

#include "qot/linalg.hpp"

namespace qot::metrics {

ObservableSet::ObservableSet(std::vector<Matrix> ops, int dim)
    : ops_(std::move(ops)), dim_(dim) {
  if (ops_.empty()) throw std::invalid_argument("ObservableSet: empty");
  for (const auto& h : ops_) {
    if (!h.is_square() || h.rows() != dim_)
      throw std::invalid_argument("ObservableSet: dimension mismatch");
    if (!h.is_hermitian(1e-10 * std::max(1.0, h.max_abs())))
      throw std::invalid_argument("ObservableSet: operator not Hermitian");
  }
  // Full-set detection: d^2-1 traceless operators with Tr(H_n H_m) =
  // 2 delta_nm, within 1e-10.
  full_ = int(ops_.size()) == dim_ * dim_ - 1;
  for (std::size_t n = 0; full_ && n < ops_.size(); ++n) {
    if (std::abs(ops_[n].trace()) > 1e-10) full_ = false;
    for (std::size_t m = n; full_ && m < ops_.size(); ++m) {
      const double want = (n == m) ? 2.0 : 0.0;
      if (std::abs(hs_dot(ops_[n], ops_[m]) - want) > 1e-10) full_ = false;
    }
  }
}

ObservableSet ObservableSet::single(Matrix h) {
  const int d = h.rows();
  std::vector<Matrix> v;
  v.push_back(std::move(h));
  return ObservableSet(std::move(v), d);
}

ObservableSet ObservableSet::from_list(std::vector<Matrix> hs) {
  if (hs.empty()) throw std::invalid_argument("ObservableSet: empty list");
  const int d = hs[0].rows();
  return ObservableSet(std::move(hs), d);
}

ObservableSet ObservableSet::su(int d) {
  return ObservableSet(linalg::su_generators(d), d);
}

}  // namespace qot::metrics
