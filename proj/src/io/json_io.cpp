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

#include "qot/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qot::io {

namespace {

using nlohmann::json;

std::vector<double> parse_part(const json& j, int d, const char* what) {
  std::vector<double> out;
  out.reserve(std::size_t(d) * d);
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  if (!j.empty() && j[0].is_array()) {
    if (int(j.size()) != d)
      throw std::invalid_argument(std::string(what) + " has wrong row count");
    for (const auto& row : j) {
      if (int(row.size()) != d)
        throw std::invalid_argument(std::string(what) + " has wrong row length");
      for (const auto& v : row) out.push_back(v.get<double>());
    }
  } else {
    if (int(j.size()) != d * d)
      throw std::invalid_argument(std::string(what) + " has wrong length");
    for (const auto& v : j) out.push_back(v.get<double>());
  }
  return out;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("re") || !j.contains("im"))
    throw std::invalid_argument("matrix JSON needs fields dim, re, im");
  const int d = j.at("dim").get<int>();
  if (d < 1) throw std::invalid_argument("matrix JSON: dim must be positive");
  const auto re = parse_part(j.at("re"), d, "re");
  const auto im = parse_part(j.at("im"), d, "im");
  Matrix m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      m(r, c) = Cplx(re[std::size_t(r) * d + c], im[std::size_t(r) * d + c]);
  return m;
}

json matrix_to_json(const Matrix& m) {
  const int d = m.rows();
  json re = json::array(), im = json::array();
  for (int r = 0; r < d; ++r) {
    json re_row = json::array(), im_row = json::array();
    for (int c = 0; c < d; ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"dim", d}, {"re", std::move(re)}, {"im", std::move(im)}};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Matrix matrix_from_json_text(const std::string& text) {
  return matrix_from_json(json::parse(text));
}

Matrix load_matrix(const std::string& path) {
  return matrix_from_json_text(slurp(path));
}

states::DensityMatrix load_state(const std::string& path) {
  return states::DensityMatrix(load_matrix(path));
}

void save_state(const std::string& path, const states::DensityMatrix& rho) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << matrix_to_json(rho.matrix()).dump(1) << "\n";
}

std::string matrix_to_json_text(const Matrix& m) {
  return matrix_to_json(m).dump(1);
}

std::vector<Matrix> load_observables(const std::string& path) {
  const json j = json::parse(slurp(path));
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("observable file must be a non-empty array");
  std::vector<Matrix> out;
  for (const auto& item : j) out.push_back(matrix_from_json(item));
  return out;
}

}  // namespace qot::io
