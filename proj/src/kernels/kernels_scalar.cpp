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

#include <algorithm>

#include "qot/kernels.hpp"

namespace qot::kernels {
namespace {

double dot_re_scalar(const Cplx* a, const Cplx* b, std::size_t n) {
  // Re(conj(a) * b) summed is a plain real dot over the interleaved view.
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  double acc = 0.0;
  for (std::size_t i = 0; i < 2 * n; ++i) acc += pa[i] * pb[i];
  return acc;
}

Cplx dotc_scalar(const Cplx* a, const Cplx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

void axpy_re_scalar(double alpha, const Cplx* x, Cplx* y, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  double* py = reinterpret_cast<double*>(y);
  for (std::size_t i = 0; i < 2 * n; ++i) py[i] += alpha * px[i];
}

void axpy_scalar(Cplx alpha, const Cplx* x, Cplx* y, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += Cplx(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

void scal_scalar(Cplx alpha, Cplx* x, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    x[i] = Cplx(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

void rot2_scalar(Cplx g00, Cplx g01, Cplx g10, Cplx g11, Cplx* x, Cplx* y,
                 std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const Cplx xv = x[i], yv = y[i];
    x[i] = g00 * xv + g01 * yv;
    y[i] = g10 * xv + g11 * yv;
  }
}

void gemm_scalar(std::size_t m, std::size_t k, std::size_t n, const Cplx* a,
                 const Cplx* b, Cplx* c) {
  std::fill(c, c + m * n, Cplx(0.0));
  for (std::size_t i = 0; i < m; ++i) {
    Cplx* crow = c + i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const Cplx av = a[i * k + l];
      if (av.real() == 0.0 && av.imag() == 0.0) continue;
      axpy_scalar(av, b + l * n, crow, n);
    }
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops = {
      "scalar",     dot_re_scalar, dotc_scalar, axpy_re_scalar,
      axpy_scalar,  scal_scalar,   rot2_scalar, gemm_scalar,
  };
  return ops;
}

}  // namespace qot::kernels
