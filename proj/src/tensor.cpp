// Copyright 2026 The opent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "opent/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "opent/errors.hpp"
#include "opent/simd/kernels.hpp"

namespace opent {
namespace {

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<>());
}

std::span<const cplx> entries(const ComplexMatrix& m) {
  return {m.data(), static_cast<std::size_t>(m.size())};
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw InputError(std::string(what) + ": matrix must be square, got " +
                     std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
  }
}

ComplexMatrix from_entries(std::vector<cplx>&& v, std::size_t rows,
                           std::size_t cols) {
  ComplexMatrix out(rows, cols);
  std::copy(v.begin(), v.end(), out.data());
  return out;
}

}  // namespace

Bipartition::Bipartition(std::size_t a, std::size_t b) : dA(a), dB(b) {
  if (a == 0 || b == 0) {
    throw InputError("bipartition dimensions must be positive");
  }
}

ComplexMatrix identity(std::size_t n) {
  return ComplexMatrix::Identity(static_cast<Eigen::Index>(n),
                                 static_cast<Eigen::Index>(n));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index br = b.rows(), bc = b.cols();
  ComplexMatrix out(a.rows() * br, a.cols() * bc);
  const auto& k = simd::active_kernels();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index r = 0; r < br; ++r) {
      cplx* dst = out.data() + (i * br + r) * out.cols();
      const cplx* src = b.data() + r * bc;
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        k.scale(a(i, j), src, dst + j * bc, static_cast<std::size_t>(bc));
      }
    }
  }
  return out;
}

ComplexMatrix kron_all(std::span<const ComplexMatrix> factors) {
  ComplexMatrix out = identity(1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

std::vector<cplx> permute_factors(std::span<const cplx> data,
                                  std::span<const std::size_t> dims,
                                  std::span<const std::size_t> perm) {
  const std::size_t n = dims.size();
  if (perm.size() != n) throw InputError("permute_factors: rank mismatch");
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) {
      throw InputError("permute_factors: not a permutation");
    }
    seen[p] = true;
  }
  if (product(dims) != data.size()) {
    throw InputError("permute_factors: data size does not match dims");
  }

  // Input strides, then the stride of each output axis in the input.
  std::vector<std::size_t> in_stride(n, 1);
  for (std::size_t k = n; k-- > 1;) in_stride[k - 1] = in_stride[k] * dims[k];
  std::vector<std::size_t> out_dims(n), src_stride(n);
  for (std::size_t k = 0; k < n; ++k) {
    out_dims[k] = dims[perm[k]];
    src_stride[k] = in_stride[perm[k]];
  }

  std::vector<cplx> out(data.size());
  if (data.empty()) return out;
  // Odometer over output indices; the innermost axis is copied as a strided
  // run.
  std::vector<std::size_t> idx(n, 0);
  const std::size_t inner = n ? out_dims[n - 1] : 1;
  const std::size_t inner_stride = n ? src_stride[n - 1] : 1;
  std::size_t pos = 0;
  while (pos < out.size()) {
    std::size_t base = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) base += idx[k] * src_stride[k];
    for (std::size_t j = 0; j < inner; ++j) {
      out[pos++] = data[base + j * inner_stride];
    }
    for (std::size_t k = n - 1; k-- > 0;) {
      if (++idx[k] < out_dims[k]) break;
      idx[k] = 0;
    }
  }
  return out;
}

ComplexMatrix permute_operator(const ComplexMatrix& m,
                               std::span<const std::size_t> dims,
                               std::span<const std::size_t> perm) {
  require_square(m, "permute_operator");
  const std::size_t n = dims.size();
  if (static_cast<std::size_t>(m.rows()) != product(dims)) {
    throw InputError("permute_operator: dimension mismatch");
  }
  std::vector<std::size_t> dims2(dims.begin(), dims.end());
  dims2.insert(dims2.end(), dims.begin(), dims.end());
  std::vector<std::size_t> perm2(perm.begin(), perm.end());
  for (std::size_t p : perm) perm2.push_back(p + n);
  return from_entries(permute_factors(entries(m), dims2, perm2), m.rows(),
                      m.cols());
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  require_square(m, "partial_trace");
  if (static_cast<std::size_t>(m.rows()) != product(dims)) {
    throw InputError("partial_trace: matrix dimension " +
                     std::to_string(m.rows()) +
                     " does not match product of factor dimensions");
  }
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= dims.size() || (i > 0 && keep[i] <= keep[i - 1])) {
      throw InputError("partial_trace: keep must be strictly increasing "
                       "factor indices");
    }
    kept[keep[i]] = true;
  }
  // Move kept factors to the front, then contract the trailing block.
  std::vector<std::size_t> perm(keep.begin(), keep.end());
  std::size_t dk = 1, dt = 1;
  for (std::size_t k : keep) dk *= dims[k];
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (!kept[k]) {
      perm.push_back(k);
      dt *= dims[k];
    }
  }
  const ComplexMatrix p = permute_operator(m, dims, perm);
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (std::size_t i = 0; i < dk; ++i) {
    for (std::size_t j = 0; j < dk; ++j) {
      cplx acc = 0.0;
      for (std::size_t t = 0; t < dt; ++t) acc += p(i * dt + t, j * dt + t);
      out(i, j) = acc;
    }
  }
  return out;
}

namespace {

// Permutation matrix sending |x_0 ... x_{n-1}> to the basis state whose slot k
// holds x_{perm[k]}: only the row axes of the identity are permuted.
ComplexMatrix factor_permutation(std::span<const std::size_t> dims,
                                 std::span<const std::size_t> perm) {
  const std::size_t n = dims.size();
  const std::size_t total = product(dims);
  std::vector<std::size_t> dims2(dims.begin(), dims.end());
  dims2.insert(dims2.end(), dims.begin(), dims.end());
  std::vector<std::size_t> perm2(perm.begin(), perm.end());
  for (std::size_t k = 0; k < n; ++k) perm2.push_back(n + k);
  const ComplexMatrix id = identity(total);
  return from_entries(permute_factors(entries(id), dims2, perm2), total, total);
}

}  // namespace

ComplexMatrix subsystem_swap(const Bipartition& bip, SwapKind which) {
  const auto dims = bip.doubled_dims();
  std::vector<std::size_t> perm;
  switch (which) {
    case SwapKind::AA: perm = {2, 1, 0, 3}; break;
    case SwapKind::BB: perm = {0, 3, 2, 1}; break;
    case SwapKind::Full: perm = {2, 3, 0, 1}; break;
  }
  return factor_permutation(dims, perm);
}

ComplexMatrix swap_operator(std::size_t n) {
  const std::size_t dims[] = {n, n};
  const std::size_t perm[] = {1, 0};
  return factor_permutation(dims, perm);
}

HermitianEigen::HermitianEigen(const ComplexMatrix& h, double tol) {
  require_square(h, "HermitianEigen");
  if (!is_hermitian(h, tol)) {
    throw InputError("matrix is not Hermitian (max |h - h^dagger| = " +
                     std::to_string(max_abs(h - h.adjoint())) + ")");
  }
  const Eigen::MatrixXcd hc = (h + h.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hc);
  if (solver.info() != Eigen::Success) {
    throw ComputeError("Hermitian eigendecomposition failed");
  }
  values_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
}

ComplexMatrix HermitianEigen::phase(double t) const {
  ComplexMatrix scaled = vectors_;
  for (Eigen::Index k = 0; k < values_.size(); ++k) {
    const double a = t * values_(k);
    scaled.col(k) *= cplx(std::cos(a), std::sin(a));
  }
  return scaled * vectors_.adjoint();
}

ComplexMatrix expm_hermitian_phase(const ComplexMatrix& h, double t,
                                   double tol) {
  return HermitianEigen(h, tol).phase(t);
}

double two_norm_sq(const ComplexMatrix& m) {
  return simd::norm_sq(entries(m));
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

Norms norms(const ComplexMatrix& m) { return {two_norm_sq(m), spectral_norm(m)}; }

cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError("hs_inner: shape mismatch");
  }
  return simd::dotc(entries(a), entries(b));
}

double max_abs(const ComplexMatrix& m) {
  return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

double unitarity_defect(const ComplexMatrix& m) {
  require_square(m, "unitarity_defect");
  return max_abs(m.adjoint() * m - identity(m.rows()));
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && unitarity_defect(m) <= tol;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

ComplexMatrix polar_unitary(const ComplexMatrix& m) {
  require_square(m, "polar_unitary");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m,
                                         Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

ComplexMatrix realign(const ComplexMatrix& m, const Bipartition& bip) {
  if (static_cast<std::size_t>(m.rows()) != bip.d() || m.rows() != m.cols()) {
    throw InputError("realign: operator is not d x d for the bipartition");
  }
  const auto dims = bip.doubled_dims();
  const std::size_t perm[] = {0, 2, 1, 3};
  return from_entries(permute_factors(entries(m), dims, perm), bip.dA * bip.dA,
                      bip.dB * bip.dB);
}

ComplexMatrix unrealign(const ComplexMatrix& r, const Bipartition& bip) {
  if (static_cast<std::size_t>(r.rows()) != bip.dA * bip.dA ||
      static_cast<std::size_t>(r.cols()) != bip.dB * bip.dB) {
    throw InputError("unrealign: shape does not match the bipartition");
  }
  const std::size_t dims[] = {bip.dA, bip.dA, bip.dB, bip.dB};
  const std::size_t perm[] = {0, 2, 1, 3};
  return from_entries(permute_factors(entries(r), dims, perm), bip.d(),
                      bip.d());
}

ComplexMatrix realign_cross(const ComplexMatrix& m, const Bipartition& bip) {
  if (static_cast<std::size_t>(m.rows()) != bip.d() || m.rows() != m.cols()) {
    throw InputError("realign_cross: operator is not d x d for the bipartition");
  }
  const auto dims = bip.doubled_dims();
  const std::size_t perm[] = {0, 3, 1, 2};
  return from_entries(permute_factors(entries(m), dims, perm), bip.d(),
                      bip.d());
}

ComplexMatrix unrealign_cross(const ComplexMatrix& q, const Bipartition& bip) {
  if (static_cast<std::size_t>(q.rows()) != bip.d() || q.rows() != q.cols()) {
    throw InputError("unrealign_cross: shape does not match the bipartition");
  }
  const std::size_t dims[] = {bip.dA, bip.dB, bip.dB, bip.dA};
  const std::size_t perm[] = {0, 2, 3, 1};
  return from_entries(permute_factors(entries(q), dims, perm), bip.d(),
                      bip.d());
}

double gram_norm_sq(const ComplexMatrix& r) {
  const ComplexMatrix g =
      r.rows() <= r.cols() ? ComplexMatrix(r * r.adjoint())
                           : ComplexMatrix(r.adjoint() * r);
  return two_norm_sq(g);
}

}  // namespace opent
