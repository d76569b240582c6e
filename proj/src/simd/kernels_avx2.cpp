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

// AVX2/FMA kernels. This file is compiled with -mavx2 -mfma and must only be
// reached through the dispatcher.

#include <immintrin.h>

#include "opent/simd/kernels.hpp"

namespace opent::simd::detail {
namespace {

// One __m256d holds two interleaved complex values [re0, im0, re1, im1].

inline const double* as_doubles(const cplx* p) {
  return reinterpret_cast<const double*>(p);
}
inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

inline double hsum_even(__m256d v) {
  alignas(32) double t[4];
  _mm256_store_pd(t, v);
  return t[0] + t[2];
}
inline double hsum_odd(__m256d v) {
  alignas(32) double t[4];
  _mm256_store_pd(t, v);
  return t[1] + t[3];
}

cplx dotc_avx2(const cplx* x, const cplx* y, std::size_t n) {
  const double* xd = as_doubles(x);
  const double* yd = as_doubles(y);
  // prod accumulates [xr*yr, xi*yi]; cross accumulates [xr*yi, xi*yr].
  __m256d prod0 = _mm256_setzero_pd(), prod1 = _mm256_setzero_pd();
  __m256d cross0 = _mm256_setzero_pd(), cross1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xa = _mm256_loadu_pd(xd + 2 * i);
    const __m256d ya = _mm256_loadu_pd(yd + 2 * i);
    const __m256d xb = _mm256_loadu_pd(xd + 2 * i + 4);
    const __m256d yb = _mm256_loadu_pd(yd + 2 * i + 4);
    prod0 = _mm256_fmadd_pd(xa, ya, prod0);
    prod1 = _mm256_fmadd_pd(xb, yb, prod1);
    cross0 = _mm256_fmadd_pd(xa, _mm256_permute_pd(ya, 0b0101), cross0);
    cross1 = _mm256_fmadd_pd(xb, _mm256_permute_pd(yb, 0b0101), cross1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d xa = _mm256_loadu_pd(xd + 2 * i);
    const __m256d ya = _mm256_loadu_pd(yd + 2 * i);
    prod0 = _mm256_fmadd_pd(xa, ya, prod0);
    cross0 = _mm256_fmadd_pd(xa, _mm256_permute_pd(ya, 0b0101), cross0);
  }
  const __m256d prod = _mm256_add_pd(prod0, prod1);
  const __m256d cross = _mm256_add_pd(cross0, cross1);
  double re = hsum_even(prod) + hsum_odd(prod);
  double im = hsum_even(cross) - hsum_odd(cross);
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

double norm_sq_avx2(const cplx* x, std::size_t n) {
  const double* xd = as_doubles(x);
  const std::size_t m = 2 * n;
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= m; i += 8) {
    const __m256d a = _mm256_loadu_pd(xd + i);
    const __m256d b = _mm256_loadu_pd(xd + i + 4);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
    acc1 = _mm256_fmadd_pd(b, b, acc1);
  }
  for (; i + 4 <= m; i += 4) {
    const __m256d a = _mm256_loadu_pd(xd + i);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
  }
  const __m256d acc = _mm256_add_pd(acc0, acc1);
  double s = hsum_even(acc) + hsum_odd(acc);
  for (; i < m; ++i) s += xd[i] * xd[i];
  return s;
}

// alpha * x for two complex lanes: fmaddsub(x, re(alpha), swap(x) * im(alpha))
inline __m256d cmul_broadcast(__m256d x, __m256d ar, __m256d ai) {
  const __m256d swapped = _mm256_permute_pd(x, 0b0101);
  return _mm256_fmaddsub_pd(x, ar, _mm256_mul_pd(swapped, ai));
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double* xd = as_doubles(x);
  double* yd = as_doubles(y);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul_broadcast(xv, ar, ai)));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] = {y[i].real() + alpha.real() * xr - alpha.imag() * xi,
            y[i].imag() + alpha.real() * xi + alpha.imag() * xr};
  }
}

void scale_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double* xd = as_doubles(x);
  double* yd = as_doubles(y);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, cmul_broadcast(xv, ar, ai));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] = {alpha.real() * xr - alpha.imag() * xi,
            alpha.real() * xi + alpha.imag() * xr};
  }
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", &dotc_avx2, &norm_sq_avx2, &axpy_avx2,
                                 &scale_avx2};
  return table;
}

}  // namespace opent::simd::detail
