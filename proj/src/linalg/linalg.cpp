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

#include "qot/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qot/kernels.hpp"

namespace qot::linalg {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

int total_dim(const std::vector<int>& dims) {
  int n = 1;
  for (int d : dims) {
    require(d >= 1, "party dimension must be >= 1");
    n *= d;
  }
  return n;
}

// Mixed-radix decode of a composite index into per-party digits,
// party 0 most significant (kron order).
void decode(int idx, const std::vector<int>& dims, std::vector<int>& out) {
  for (int p = int(dims.size()) - 1; p >= 0; --p) {
    out[p] = idx % dims[p];
    idx /= dims[p];
  }
}

int encode(const std::vector<int>& digits, const std::vector<int>& dims) {
  int idx = 0;
  for (std::size_t p = 0; p < dims.size(); ++p) idx = idx * dims[p] + digits[p];
  return idx;
}

}  // namespace

Matrix EigenDecomposition::assemble(const std::vector<double>& weights) const {
  const int n = eigenvectors.rows();
  // V diag(w) in a temp, then times V^dag.
  Matrix t(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t(i, j) = eigenvectors(i, j) * weights[j];
  Matrix vd = eigenvectors.adjoint();
  Matrix out(n, n);
  kernels::active().gemm(n, n, n, t.data(), vd.data(), out.data());
  out.hermitize();
  return out;
}

EigenDecomposition hermitian_eig(const Matrix& m, const EigOptions& opt) {
  require(m.is_square(), "hermitian_eig: matrix not square");
  const int n = m.rows();
  require(n >= 1, "hermitian_eig: empty matrix");
  if (m.hermiticity_defect() > 1e-12 * std::max(1.0, m.max_abs()))
    throw std::invalid_argument("hermitian_eig: matrix not Hermitian");

  Matrix a = m;
  a.hermitize();
  // W accumulates the conjugated rotations; its rows end up being the
  // conjugated eigenvectors, so V = W^dag has them as columns. Row
  // updates keep the kernel accesses contiguous.
  Matrix w = Matrix::identity(n);

  const double scale = std::max(1.0, a.max_abs());
  const double thresh = opt.threshold * scale;
  const auto& k = kernels::active();

  double off = 0.0;
  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    off = 0.0;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Cplx apq = a(p, q);
        const double mag = std::abs(apq);
        off = std::max(off, mag);
        if (mag <= thresh) continue;

        // 2x2 block [[app, apq], [conj(apq), aqq]]. Strip the phase of
        // apq, then the standard real Jacobi rotation.
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const Cplx phase = apq / mag;  // e^{i alpha}
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // U = diag(1, conj(phase)) * [[c, s], [-s, c]]:
        const Cplx u00(c, 0.0);
        const Cplx u01(s, 0.0);
        const Cplx u10 = -s * std::conj(phase);
        const Cplx u11 = c * std::conj(phase);

        // a <- U^dag a U. Rows first (contiguous), then columns.
        k.rot2(std::conj(u00), std::conj(u10), std::conj(u01), std::conj(u11),
               a.row(p), a.row(q), n);
        for (int i = 0; i < n; ++i) {
          const Cplx xp = a(i, p), xq = a(i, q);
          a(i, p) = xp * u00 + xq * u10;
          a(i, q) = xp * u01 + xq * u11;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = Cplx(a(p, p).real(), 0.0);
        a(q, q) = Cplx(a(q, q).real(), 0.0);

        k.rot2(std::conj(u00), std::conj(u10), std::conj(u01), std::conj(u11),
               w.row(p), w.row(q), n);
      }
    }
    if (off <= thresh) break;
  }
  if (off > thresh) {
    std::ostringstream msg;
    msg << "hermitian_eig: no convergence after " << opt.max_sweeps
        << " sweeps, off-diagonal residual " << off;
    throw std::runtime_error(msg.str());
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (int i = 0; i < n; ++i)
      out.eigenvectors(i, j) = std::conj(w(order[j], i));
  }
  return out;
}

Matrix psd_sqrt(const Matrix& m) {
  EigenDecomposition ed = hermitian_eig(m);
  std::vector<double> w(ed.eigenvalues.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double lam = ed.eigenvalues[i];
    if (lam < -1e-10) throw std::invalid_argument("psd_sqrt: not PSD");
    w[i] = std::sqrt(std::max(0.0, lam));
  }
  return ed.assemble(w);
}

Matrix psd_project(const Matrix& m, double* min_eig) {
  EigenDecomposition ed = hermitian_eig(m);
  if (min_eig != nullptr) *min_eig = ed.eigenvalues.front();
  if (ed.eigenvalues.front() >= 0.0) {
    Matrix out = m;
    out.hermitize();
    return out;
  }
  std::vector<double> w(ed.eigenvalues.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] = std::max(0.0, ed.eigenvalues[i]);
  return ed.assemble(w);
}

double min_eigenvalue(const Matrix& m) {
  return hermitian_eig(m).eigenvalues.front();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Cplx av = a(i, j);
      if (av == Cplx(0.0)) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = av * b(k, l);
    }
  return r;
}

Matrix partial_trace(const Matrix& m, const std::vector<int>& dims,
                     const std::vector<int>& traced) {
  const int n = total_dim(dims);
  require(m.is_square() && m.rows() == n,
          "partial_trace: dims do not match matrix");
  std::vector<bool> is_traced(dims.size(), false);
  for (int p : traced) {
    require(p >= 0 && p < int(dims.size()), "partial_trace: bad party index");
    is_traced[p] = true;
  }

  std::vector<int> kept_dims, kept_idx, traced_idx;
  for (std::size_t p = 0; p < dims.size(); ++p) {
    if (is_traced[p])
      traced_idx.push_back(int(p));
    else {
      kept_dims.push_back(dims[p]);
      kept_idx.push_back(int(p));
    }
  }
  const int nk = total_dim(kept_dims);
  int nt = 1;
  for (int p : traced_idx) nt *= dims[p];

  Matrix r(nk, nk);
  std::vector<int> kd(kept_dims.size()), kd2(kept_dims.size());
  std::vector<int> td(traced_idx.size());
  std::vector<int> dig(dims.size()), dig2(dims.size());
  std::vector<int> tdims(traced_idx.size());
  for (std::size_t i = 0; i < traced_idx.size(); ++i)
    tdims[i] = dims[traced_idx[i]];

  for (int a = 0; a < nk; ++a) {
    decode(a, kept_dims, kd);
    for (int b = 0; b < nk; ++b) {
      decode(b, kept_dims, kd2);
      Cplx acc = 0.0;
      for (int t = 0; t < nt; ++t) {
        if (!tdims.empty()) decode(t, tdims, td);
        for (std::size_t i = 0; i < kept_idx.size(); ++i) {
          dig[kept_idx[i]] = kd[i];
          dig2[kept_idx[i]] = kd2[i];
        }
        for (std::size_t i = 0; i < traced_idx.size(); ++i) {
          dig[traced_idx[i]] = td[i];
          dig2[traced_idx[i]] = td[i];
        }
        acc += m(encode(dig, dims), encode(dig2, dims));
      }
      r(a, b) = acc;
    }
  }
  return r;
}

Matrix partial_transpose(const Matrix& m, const std::vector<int>& dims,
                         const std::vector<int>& parties) {
  const int n = total_dim(dims);
  require(m.is_square() && m.rows() == n,
          "partial_transpose: dims do not match matrix");
  std::vector<bool> flip(dims.size(), false);
  for (int p : parties) {
    require(p >= 0 && p < int(dims.size()),
            "partial_transpose: bad party index");
    flip[p] = true;
  }
  Matrix r(n, n);
  std::vector<int> ri(dims.size()), ci(dims.size());
  for (int a = 0; a < n; ++a) {
    decode(a, dims, ri);
    for (int b = 0; b < n; ++b) {
      decode(b, dims, ci);
      std::vector<int> ri2 = ri, ci2 = ci;
      for (std::size_t p = 0; p < dims.size(); ++p)
        if (flip[p]) std::swap(ri2[p], ci2[p]);
      r(encode(ri2, dims), encode(ci2, dims)) = m(a, b);
    }
  }
  return r;
}

Matrix lift_onto_parties(const Matrix& op, const std::vector<int>& dims,
                         const std::vector<int>& parties) {
  const int n = total_dim(dims);
  std::vector<int> pdims(parties.size());
  for (std::size_t i = 0; i < parties.size(); ++i) {
    require(parties[i] >= 0 && parties[i] < int(dims.size()),
            "lift_onto_parties: bad party index");
    pdims[i] = dims[parties[i]];
  }
  const int dk = total_dim(pdims);
  require(op.is_square() && op.rows() == dk,
          "lift_onto_parties: operator dim mismatch");

  std::vector<bool> on(dims.size(), false);
  for (int p : parties) on[p] = true;

  Matrix r(n, n);
  std::vector<int> ri(dims.size()), ci(dims.size());
  std::vector<int> rk(parties.size()), ck(parties.size());
  for (int a = 0; a < n; ++a) {
    decode(a, dims, ri);
    for (int b = 0; b < n; ++b) {
      decode(b, dims, ci);
      bool diag_rest = true;
      for (std::size_t p = 0; p < dims.size(); ++p)
        if (!on[p] && ri[p] != ci[p]) {
          diag_rest = false;
          break;
        }
      if (!diag_rest) continue;
      for (std::size_t i = 0; i < parties.size(); ++i) {
        rk[i] = ri[parties[i]];
        ck[i] = ci[parties[i]];
      }
      r(a, b) = op(encode(rk, pdims), encode(ck, pdims));
    }
  }
  return r;
}

Matrix swap_operator(int d) {
  require(d >= 2, "swap_operator: d must be >= 2");
  Matrix s(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s(i * d + j, j * d + i) = 1.0;
  return s;
}

std::vector<Matrix> su_generators(int d) {
  require(d >= 2, "su_generators: d must be >= 2");
  std::vector<Matrix> out;
  out.reserve(std::size_t(d) * d - 1);
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      Matrix h(d, d);
      h(j, k) = 1.0;
      h(k, j) = 1.0;
      out.push_back(std::move(h));
    }
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      Matrix h(d, d);
      h(j, k) = Cplx(0.0, -1.0);
      h(k, j) = Cplx(0.0, 1.0);
      out.push_back(std::move(h));
    }
  for (int l = 1; l < d; ++l) {
    Matrix h(d, d);
    const double norm = std::sqrt(2.0 / (double(l) * (l + 1)));
    for (int j = 0; j < l; ++j) h(j, j) = norm;
    h(l, l) = -norm * l;
    out.push_back(std::move(h));
  }
  return out;
}

Matrix jz_operator(int d) {
  require(d >= 2, "jz_operator: d must be >= 2");
  Matrix h(d, d);
  for (int i = 0; i < d; ++i) h(i, i) = -0.5 * (d - 1) + i;
  return h;
}

Matrix symmetric_projector(int d, int p) {
  require(d >= 2 && p >= 2, "symmetric_projector: need d >= 2, p >= 2");
  int n = 1;
  for (int i = 0; i < p; ++i) n *= d;
  std::vector<int> dims(p, d);

  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  double fact = 1.0;
  for (int i = 2; i <= p; ++i) fact *= i;

  Matrix r(n, n);
  std::vector<int> dig(p), pdig(p);
  do {
    for (int a = 0; a < n; ++a) {
      decode(a, dims, dig);
      for (int i = 0; i < p; ++i) pdig[i] = dig[perm[i]];
      r(encode(pdig, dims), a) += 1.0 / fact;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  r.hermitize();
  return r;
}

}  // namespace qot::linalg
