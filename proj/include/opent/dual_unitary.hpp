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

// Dual-unitary brickwork circuits on chains of qudits.
//
// Two-site gates act on (site i, site i+1) with site i the left Kronecker
// factor. Folded (vectorized) operators use |m><n| -> |m> (x) |n>, stored at
// folded index m*q + n.

#include <cstddef>
#include <vector>

#include "opent/tensor.hpp"

namespace opent {

struct SU2Params {
  double r = 1.0;
  double omega = 0.0;
  double theta = 0.0;
};

/// [[r e^{i w/2}, -s e^{-i th/2}], [s e^{i th/2}, r e^{-i w/2}]],
/// s = sqrt(1 - r^2). Throws InputError outside r in [0,1], angles in
/// [0, 4 pi].
ComplexMatrix su2(const SU2Params& p);

/// Default single-qubit rotation used on the input legs of the gate family.
inline constexpr SU2Params kDefaultSU2{0.5, 0.7, 0.0};

struct DUGateSpec {
  double J = 0.0;
  double phi = 0.0;
  ComplexMatrix u_plus = identity(2);
  ComplexMatrix u_minus = identity(2);
  ComplexMatrix v_plus = su2(kDefaultSU2);
  ComplexMatrix v_minus = su2(kDefaultSU2);
};

/// e^{i phi} (u+ (x) u-) exp(-i (pi/4 XX + pi/4 YY + J ZZ)) (v+ (x) v-).
ComplexMatrix du_gate(const DUGateSpec& spec);

struct DualUnitarityReport {
  double unitarity_defect = 0.0;
  double dual_defect = 0.0;
  bool ok = false;
};

/// The space-time reshuffle: W[(o2 i2), (o1 i1)] = V[(o1 o2), (i1 i2)].
ComplexMatrix space_time_reshuffle(const ComplexMatrix& v, std::size_t q);

DualUnitarityReport dual_unitarity_report(const ComplexMatrix& v, std::size_t q,
                                          double tol = kUnitaryTol);
/// Throws InputError unless v is q^2 x q^2.
bool check_dual_unitarity(const ComplexMatrix& v, std::size_t q,
                          double tol = kUnitaryTol);

/// Left-multiplies m (rows indexed by an L-site chain of q-level sites) by
/// the two-site gate v on sites (site, site + 1).
void apply_two_site_left(ComplexMatrix& m, const ComplexMatrix& v,
                         std::size_t q, std::size_t L, std::size_t site);

/// (U_o U_e)^t with U_e = V on pairs (1,2),(3,4),... and U_o on (2,3),...
/// Throws InputError for odd L or q^L > 4096.
ComplexMatrix brickwork_unitary(const ComplexMatrix& v, std::size_t L,
                                std::size_t t);

std::size_t t_star(std::size_t L);

/// Half-chain operator entanglement of U_t (X (x) 1) U_t^dagger averaged over
/// Haar X on site 1. The single-site average is carried out exactly with
/// second-order Weingarten calculus. L <= 10.
double e_loc_exact(const ComplexMatrix& v, std::size_t L, std::size_t t);

struct TransferSet {
  ComplexMatrix m_minus;
  ComplexMatrix m_plus;
  ComplexMatrix p;
  std::size_t q = 2;
};

/// Folded gate F = V (x) V* as a rank-4 tensor over folded legs
/// [out1, out2, in1, in2], each of size q^2, flattened row-major.
std::vector<cplx> folded_gate(const ComplexMatrix& v, std::size_t q);

/// Light-cone transfer matrices. M_- closes out1 and in2 of the folded gate
/// with the normalized folded identity, M_+ closes out2 and in1. P joins two
/// folded gates (V (x) V* and V* (x) V) with out1 closed and in2 contracted
/// between them. Throws InputError for gates that are not dual-unitary.
TransferSet transfer_set(const ComplexMatrix& v, std::size_t q);

/// Closed form of E_loc at t = t_star(L) from the transfer matrices.
double e_loc_tstar(const TransferSet& ts, std::size_t L);
double e_loc_tstar(const ComplexMatrix& v, std::size_t L);

/// Operator-space entangling power of the gate family as a function of J.
double ep_of_J(double J);

/// Integer matrix power by repeated squaring.
ComplexMatrix matrix_power(const ComplexMatrix& m, std::size_t n);

}  // namespace opent
