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

#ifndef QOT_KERNELS_HPP_
#define QOT_KERNELS_HPP_

#include <complex>
#include <cstddef>

namespace qot::kernels {

using Cplx = std::complex<double>;

/// Dense complex-double kernels used by the matrix layer and the conic
/// solver. Two implementations exist: a scalar reference and an AVX2
/// variant; both must agree to floating-point roundoff (accumulation
/// order may differ, so equality is tested to ~1e-13 relative, not
/// bitwise). All buffers are contiguous with interleaved re/im storage
/// (std::complex layout) and may alias only where noted.
struct Ops {
  const char* name;

  /// Real part of sum_i conj(a[i]) * b[i]. For Hermitian A, B stored as
  /// flat buffers this is the Hilbert-Schmidt inner product Tr(A B).
  double (*dot_re)(const Cplx* a, const Cplx* b, std::size_t n);

  /// sum_i conj(a[i]) * b[i].
  Cplx (*dotc)(const Cplx* a, const Cplx* b, std::size_t n);

  /// y += alpha * x, real alpha.
  void (*axpy_re)(double alpha, const Cplx* x, Cplx* y, std::size_t n);

  /// y += alpha * x, complex alpha.
  void (*axpy)(Cplx alpha, const Cplx* x, Cplx* y, std::size_t n);

  /// x *= alpha.
  void (*scal)(Cplx alpha, Cplx* x, std::size_t n);

  /// Plane rotation of two vectors:
  ///   (x, y) <- (g00*x + g01*y, g10*x + g11*y), elementwise.
  /// x and y must not alias.
  void (*rot2)(Cplx g00, Cplx g01, Cplx g10, Cplx g11, Cplx* x, Cplx* y,
               std::size_t n);

  /// c (m x n) = a (m x k) * b (k x n), all row-major, c overwritten.
  /// c must not alias a or b.
  void (*gemm)(std::size_t m, std::size_t k, std::size_t n, const Cplx* a,
               const Cplx* b, Cplx* c);
};

const Ops& scalar_ops();

/// True when the AVX2 variant was compiled in and the CPU supports it.
bool avx2_available();
const Ops& avx2_ops();

/// The runtime-selected table: AVX2 when available, scalar otherwise.
/// QOT_KERNELS=scalar (or =avx2) in the environment overrides the choice;
/// requesting avx2 on an unsupported CPU falls back to scalar.
const Ops& active();

}  // namespace qot::kernels

#endif  // QOT_KERNELS_HPP_
