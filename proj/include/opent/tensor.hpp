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

// Dense complex linear algebra on tensor-product spaces.
//
// Layout: every matrix is row-major. A vector on V_1 (x) ... (x) V_n is indexed
// with factor 1 as the most significant digit, so kron(a, b) places `a` on the
// left factor. Operators on the doubled space of a bipartition use the factor
// order (A, B, A', B').

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace opent {

using cplx = std::complex<double>;
using ComplexMatrix =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RealVector = Eigen::VectorXd;

/// Absolute entrywise tolerance for unitarity checks.
inline constexpr double kUnitaryTol = 1e-12;
/// Absolute entrywise tolerance for hermiticity checks on exponent inputs.
inline constexpr double kHermitianTol = 1e-10;

struct Bipartition {
  std::size_t dA = 1;
  std::size_t dB = 1;

  Bipartition() = default;
  /// Throws InputError if either side is zero.
  Bipartition(std::size_t a, std::size_t b);
  static Bipartition symmetric(std::size_t side) { return {side, side}; }

  std::size_t d() const { return dA * dB; }
  bool is_symmetric() const { return dA == dB; }
  /// Factor dimensions of the doubled space, order (A, B, A', B').
  std::vector<std::size_t> doubled_dims() const { return {dA, dB, dA, dB}; }
  Bipartition swapped() const { return {dB, dA}; }
};

ComplexMatrix identity(std::size_t n);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
/// Left-to-right Kronecker product; an empty list yields the 1x1 identity.
ComplexMatrix kron_all(std::span<const ComplexMatrix> factors);

/// Reorders the axes of a row-major tensor with shape `dims` so that output
/// axis k is input axis perm[k]. This is the only routine that performs
/// index permutations; everything else goes through it.
std::vector<cplx> permute_factors(std::span<const cplx> data,
                                  std::span<const std::size_t> dims,
                                  std::span<const std::size_t> perm);

/// Conjugates an operator on (x)_k V_dims[k] by the factor permutation that
/// puts old factor perm[k] into slot k.
ComplexMatrix permute_operator(const ComplexMatrix& m,
                               std::span<const std::size_t> dims,
                               std::span<const std::size_t> perm);

/// Traces out every factor not listed in `keep` (strictly increasing).
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

enum class SwapKind { AA, BB, Full };

/// Permutation on the doubled space (A, B, A', B'). AA and BB exchange the
/// primed copy of one side; Full exchanges (A, B) with (A', B').
ComplexMatrix subsystem_swap(const Bipartition& bip, SwapKind which);

/// The swap of two copies of C^n, on C^n (x) C^n.
ComplexMatrix swap_operator(std::size_t n);

/// Spectral decomposition of a Hermitian matrix, reused across many times.
class HermitianEigen {
 public:
  explicit HermitianEigen(const ComplexMatrix& h, double tol = kHermitianTol);
  /// exp(i t h)
  ComplexMatrix phase(double t) const;
  const RealVector& eigenvalues() const { return values_; }
  const ComplexMatrix& eigenvectors() const { return vectors_; }

 private:
  RealVector values_;
  ComplexMatrix vectors_;
};

/// exp(i t h) for Hermitian h. Throws InputError when h is not Hermitian to
/// `tol` (max-abs entry of h - h^dagger).
ComplexMatrix expm_hermitian_phase(const ComplexMatrix& h, double t,
                                   double tol = kHermitianTol);

struct Norms {
  double two_norm_sq = 0.0;
  double spectral_norm = 0.0;
};
Norms norms(const ComplexMatrix& m);
/// Tr(m^dagger m)
double two_norm_sq(const ComplexMatrix& m);
double spectral_norm(const ComplexMatrix& m);
/// Tr(a^dagger b)
cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs(const ComplexMatrix& m);
/// max-abs entry of m^dagger m - 1
double unitarity_defect(const ComplexMatrix& m);
bool is_unitary(const ComplexMatrix& m, double tol = kUnitaryTol);
bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);

/// Nearest unitary in Frobenius norm (polar factor).
ComplexMatrix polar_unitary(const ComplexMatrix& m);

/// Operator-Schmidt realignment across A:B. For m on A (x) B the result is
/// dA^2 x dB^2 with R[(a a'), (b b')] = m[(a b), (a' b')].
ComplexMatrix realign(const ComplexMatrix& m, const Bipartition& bip);
ComplexMatrix unrealign(const ComplexMatrix& r, const Bipartition& bip);

/// Cross realignment, d x d with Q[(a b'), (b a')] = m[(a b), (a' b')]:
/// rows carry the A output and B input, columns the B output and A input.
ComplexMatrix realign_cross(const ComplexMatrix& m, const Bipartition& bip);
ComplexMatrix unrealign_cross(const ComplexMatrix& q, const Bipartition& bip);

/// ||r r^dagger||_2^2, evaluated through the smaller of the two Gram
/// matrices.
double gram_norm_sq(const ComplexMatrix& r);

}  // namespace opent
