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

#ifndef QOT_MATRIX_HPP_
#define QOT_MATRIX_HPP_

#include <complex>
#include <cstddef>
#include <vector>

namespace qot {

using Cplx = std::complex<double>;

/// Dense complex matrix, row-major contiguous storage (interleaved
/// re/im per entry). Products and inner products go through the
/// runtime-dispatched kernels. Values are immutable in practice: every
/// operation below returns a fresh matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return a_.size(); }
  bool is_square() const { return rows_ == cols_; }

  Cplx& operator()(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
  const Cplx& operator()(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

  Cplx* data() { return a_.data(); }
  const Cplx* data() const { return a_.data(); }
  Cplx* row(int r) { return a_.data() + std::size_t(r) * cols_; }
  const Cplx* row(int r) const { return a_.data() + std::size_t(r) * cols_; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(Cplx s) const;
  Matrix operator*(double s) const { return *this * Cplx(s, 0.0); }
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(Cplx s);

  Matrix transpose() const;
  Matrix conj() const;
  Matrix adjoint() const;

  Cplx trace() const;
  double max_abs() const;
  double frob_norm() const;
  /// max |(M - M^dag)_{ij}|; matrix must be square.
  double hermiticity_defect() const;
  bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }
  /// Replace M by (M + M^dag)/2 in place.
  void hermitize();

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cplx> a_;
};

inline Matrix operator*(Cplx s, const Matrix& m) { return m * s; }
inline Matrix operator*(double s, const Matrix& m) { return m * Cplx(s, 0.0); }

/// Re Tr(A^dag B); for Hermitian arguments this is Tr(A B), the
/// Hilbert-Schmidt inner product used throughout the solver.
double hs_dot(const Matrix& a, const Matrix& b);

/// Tr(A^dag B).
Cplx mat_inner(const Matrix& a, const Matrix& b);

double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace qot

#endif  // QOT_MATRIX_HPP_
