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

#pragma once

// Data-parallel complex kernels used by the dense tensor routines.
//
// Every kernel has a portable scalar reference implementation and, on x86-64,
// an AVX2/FMA variant compiled in its own translation unit. The variant is
// chosen once at first use from the CPU feature bits; setting the environment
// variable OPENT_SIMD=scalar forces the reference path.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace opent::simd {

using cplx = std::complex<double>;

struct KernelTable {
  std::string_view name;
  /// sum_i conj(x_i) * y_i
  cplx (*dotc)(const cplx* x, const cplx* y, std::size_t n);
  /// sum_i |x_i|^2
  double (*norm_sq)(const cplx* x, std::size_t n);
  /// y_i += alpha * x_i
  void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
  /// y_i = alpha * x_i
  void (*scale)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
};

const KernelTable& scalar_kernels();

/// nullptr when the binary was built without the AVX2 unit or the CPU lacks
/// AVX2/FMA.
const KernelTable* avx2_kernels();

/// The table selected for this process.
const KernelTable& active_kernels();

// Convenience wrappers over the active table.

inline cplx dotc(std::span<const cplx> x, std::span<const cplx> y) {
  return active_kernels().dotc(x.data(), y.data(), x.size());
}

inline double norm_sq(std::span<const cplx> x) {
  return active_kernels().norm_sq(x.data(), x.size());
}

inline void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
  active_kernels().axpy(alpha, x.data(), y.data(), x.size());
}

inline void scale(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
  active_kernels().scale(alpha, x.data(), y.data(), x.size());
}

}  // namespace opent::simd
