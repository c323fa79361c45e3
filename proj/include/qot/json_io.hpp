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

#ifndef QOT_JSON_IO_HPP_
#define QOT_JSON_IO_HPP_

#include <string>
#include <vector>

#include "qot/matrix.hpp"
#include "qot/states.hpp"

namespace qot::io {

/// State files are JSON objects {"dim": d, "re": ..., "im": ...} where
/// re/im hold the d x d real and imaginary parts in row-major order,
/// either as a flat list of d^2 numbers or as d nested rows. Loading a
/// state applies the DensityMatrix invariants (unit trace, PSD).
Matrix matrix_from_json_text(const std::string& text);
Matrix load_matrix(const std::string& path);
states::DensityMatrix load_state(const std::string& path);
void save_state(const std::string& path, const states::DensityMatrix& rho);
std::string matrix_to_json_text(const Matrix& m);

/// Observable files are a JSON array of objects in the same re/im format.
std::vector<Matrix> load_observables(const std::string& path);

}  // namespace qot::io

#endif  // QOT_JSON_IO_HPP_
