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

#include "qot/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "qot/kernels.hpp"

namespace qot {

namespace {
void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}
}  // namespace

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in +");
  Matrix r = *this;
  kernels::active().axpy_re(1.0, o.data(), r.data(), r.size());
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in -");
  Matrix r = *this;
  kernels::active().axpy_re(-1.0, o.data(), r.data(), r.size());
  return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in +=");
  kernels::active().axpy_re(1.0, o.data(), data(), size());
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in -=");
  kernels::active().axpy_re(-1.0, o.data(), data(), size());
  return *this;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(cols_ == o.rows_, "matrix shape mismatch in *");
  Matrix r(rows_, o.cols_);
  kernels::active().gemm(rows_, cols_, o.cols_, data(), o.data(), r.data());
  return r;
}

Matrix Matrix::operator*(Cplx s) const {
  Matrix r = *this;
  kernels::active().scal(s, r.data(), r.size());
  return r;
}

Matrix& Matrix::operator*=(Cplx s) {
  kernels::active().scal(s, data(), size());
  return *this;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::conj() const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = std::conj(a_[i]);
  return r;
}

Matrix Matrix::adjoint() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

Cplx Matrix::trace() const {
  require(is_square(), "trace of non-square matrix");
  Cplx t = 0.0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const Cplx& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double Matrix::frob_norm() const {
  return std::sqrt(kernels::active().dot_re(data(), data(), size()));
}

double Matrix::hermiticity_defect() const {
  require(is_square(), "hermiticity of non-square matrix");
  double m = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

void Matrix::hermitize() {
  require(is_square(), "hermitize of non-square matrix");
  for (int i = 0; i < rows_; ++i) {
    (*this)(i, i) = Cplx((*this)(i, i).real(), 0.0);
    for (int j = i + 1; j < cols_; ++j) {
      const Cplx v = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
      (*this)(i, j) = v;
      (*this)(j, i) = std::conj(v);
    }
  }
}

double hs_dot(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch in hs_dot");
  return kernels::active().dot_re(a.data(), b.data(), a.size());
}

Cplx mat_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch in mat_inner");
  return kernels::active().dotc(a.data(), b.data(), a.size());
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch in max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

}  // namespace qot
