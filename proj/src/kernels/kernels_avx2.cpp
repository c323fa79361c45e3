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

// AVX2 + FMA variants of the complex kernels. This translation unit is
// compiled with -mavx2 -mfma on x86-64 only; the dispatcher checks CPU
// support at runtime before handing out this table.
//
// Complex products use the permute/fmaddsub idiom: with x = [re, im]
// interleaved and alpha = ar + i*ai,
//   fmaddsub(ar, x, ai * swap(x)) = [ar*re - ai*im, ar*im + ai*re],
// which is exactly alpha * x in one fused step per lane pair.

#include "qot/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <algorithm>

namespace qot::kernels {
namespace {

inline __m256d swap_reim(__m256d v) { return _mm256_permute_pd(v, 0x5); }

// alpha * v for 2 complex doubles per register.
inline __m256d cmul(__m256d ar, __m256d ai, __m256d v) {
  return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, swap_reim(v)));
}

double dot_re_avx2(const Cplx* a, const Cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  const std::size_t len = 2 * n;
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i),
                           acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(pa + i + 4),
                           _mm256_loadu_pd(pb + i + 4), acc1);
  }
  for (; i + 4 <= len; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i),
                           acc0);
  }
  double buf[4];
  _mm256_storeu_pd(buf, _mm256_add_pd(acc0, acc1));
  double acc = buf[0] + buf[1] + buf[2] + buf[3];
  for (; i < len; ++i) acc += pa[i] * pb[i];
  return acc;
}

Cplx dotc_avx2(const Cplx* a, const Cplx* b, std::size_t n) {
  __m256d accp = _mm256_setzero_pd();  // pairs (ar*br, ai*bi): re part
  __m256d accq = _mm256_setzero_pd();  // pairs (ar*bi, ai*br): im part
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(reinterpret_cast<const double*>(a + i));
    const __m256d vb = _mm256_loadu_pd(reinterpret_cast<const double*>(b + i));
    accp = _mm256_fmadd_pd(va, vb, accp);
    accq = _mm256_fmadd_pd(va, swap_reim(vb), accq);
  }
  double p[4], q[4];
  _mm256_storeu_pd(p, accp);
  _mm256_storeu_pd(q, accq);
  double re = p[0] + p[1] + p[2] + p[3];
  double im = q[0] - q[1] + q[2] - q[3];
  for (; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

void axpy_re_avx2(double alpha, const Cplx* x, Cplx* y, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  double* py = reinterpret_cast<double*>(y);
  const std::size_t len = 2 * n;
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256d vy = _mm256_loadu_pd(py + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(px + i), vy);
    _mm256_storeu_pd(py + i, vy);
  }
  for (; i < len; ++i) py[i] += alpha * px[i];
}

void axpy_avx2(Cplx alpha, const Cplx* x, Cplx* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
    __m256d vy = _mm256_loadu_pd(reinterpret_cast<double*>(y + i));
    vy = _mm256_add_pd(vy, cmul(ar, ai, vx));
    _mm256_storeu_pd(reinterpret_cast<double*>(y + i), vy);
  }
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += Cplx(alpha.real() * xr - alpha.imag() * xi,
                 alpha.real() * xi + alpha.imag() * xr);
  }
}

void scal_avx2(Cplx alpha, Cplx* x, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
    _mm256_storeu_pd(reinterpret_cast<double*>(x + i), cmul(ar, ai, vx));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    x[i] = Cplx(alpha.real() * xr - alpha.imag() * xi,
                alpha.real() * xi + alpha.imag() * xr);
  }
}

void rot2_avx2(Cplx g00, Cplx g01, Cplx g10, Cplx g11, Cplx* x, Cplx* y,
               std::size_t n) {
  const __m256d a00r = _mm256_set1_pd(g00.real()),
                a00i = _mm256_set1_pd(g00.imag());
  const __m256d a01r = _mm256_set1_pd(g01.real()),
                a01i = _mm256_set1_pd(g01.imag());
  const __m256d a10r = _mm256_set1_pd(g10.real()),
                a10i = _mm256_set1_pd(g10.imag());
  const __m256d a11r = _mm256_set1_pd(g11.real()),
                a11i = _mm256_set1_pd(g11.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
    const __m256d vy = _mm256_loadu_pd(reinterpret_cast<const double*>(y + i));
    const __m256d nx =
        _mm256_add_pd(cmul(a00r, a00i, vx), cmul(a01r, a01i, vy));
    const __m256d ny =
        _mm256_add_pd(cmul(a10r, a10i, vx), cmul(a11r, a11i, vy));
    _mm256_storeu_pd(reinterpret_cast<double*>(x + i), nx);
    _mm256_storeu_pd(reinterpret_cast<double*>(y + i), ny);
  }
  for (; i < n; ++i) {
    const Cplx xv = x[i], yv = y[i];
    x[i] = g00 * xv + g01 * yv;
    y[i] = g10 * xv + g11 * yv;
  }
}

void gemm_avx2(std::size_t m, std::size_t k, std::size_t n, const Cplx* a,
               const Cplx* b, Cplx* c) {
  std::fill(c, c + m * n, Cplx(0.0));
  for (std::size_t i = 0; i < m; ++i) {
    Cplx* crow = c + i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const Cplx av = a[i * k + l];
      if (av.real() == 0.0 && av.imag() == 0.0) continue;
      axpy_avx2(av, b + l * n, crow, n);
    }
  }
}

}  // namespace

const Ops& avx2_ops_table() {
  static const Ops ops = {
      "avx2",    dot_re_avx2, dotc_avx2, axpy_re_avx2,
      axpy_avx2, scal_avx2,   rot2_avx2, gemm_avx2,
  };
  return ops;
}

}  // namespace qot::kernels

#endif  // __AVX2__ && __FMA__
