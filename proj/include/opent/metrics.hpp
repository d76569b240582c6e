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

// Operator entanglement and the entangling-power family.
//
// Closed forms are evaluated through operator-Schmidt realignments rather than
// by building d^2 x d^2 doubled-space operators:
//   E(U)   = 1 - ||R R^dagger||_2^2 / d^2,  R = realign(U)
//   E(US)  = 1 - ||Q Q^dagger||_2^2 / d^2,  Q = realign_cross(U)
// Both traces equal the swap-operator expressions on the doubled space; the
// unit tests check that against brute-force d^2 x d^2 evaluation.

#include <cstddef>
#include <cstdint>

#include "opent/sampling.hpp"
#include "opent/tensor.hpp"

namespace opent {

enum class MetricKind { E, E_swapped, S_AB, S_AA, Ep, ep };
const char* to_string(MetricKind kind);

struct MetricValue {
  double value = 0.0;
  MetricKind kind = MetricKind::E;
  Bipartition bip;
  /// True when the evaluation relabeled A and B so that dA <= dB.
  bool relabeled = false;
};

/// Throws InputError unless u is d x d and unitary to kUnitaryTol.
void require_unitary(const ComplexMatrix& u, const Bipartition& bip);

/// E(U). Also evaluates the B-side trace and throws ComputeError if the two
/// disagree by more than 1e-12.
MetricValue op_entanglement(const ComplexMatrix& u, const Bipartition& bip);

/// E(U S) with S the full swap; symmetric bipartitions only.
MetricValue op_entanglement_swapped(const ComplexMatrix& u,
                                    const Bipartition& bip);

/// Unchecked fast paths for hot loops whose input is unitary by
/// construction: no unitarity test and a single Gram product.
double op_entanglement_value(const ComplexMatrix& u, const Bipartition& bip);
double op_entanglement_swapped_value(const ComplexMatrix& u,
                                     const Bipartition& bip);

/// Linear entropy of the normalized operator-Schmidt spectrum of an arbitrary
/// operator: 1 - Tr(G^2) / Tr(G)^2 with G = R R^dagger. Equals E(U) for
/// unitary input. Throws InputError for the zero operator.
double schmidt_linear_entropy(const ComplexMatrix& o, const Bipartition& bip);

/// Mutual averaged non-commutativities S(U(A):B) and S(U(A):A).
MetricValue man_ab(const ComplexMatrix& u, const Bipartition& bip);
MetricValue man_aa(const ComplexMatrix& u, const Bipartition& bip);

/// Operator-space entangling power, closed form. Relabels A and B when
/// dA > dB. For symmetric bipartitions the general and symmetric forms are
/// both evaluated and must agree to 1e-12.
MetricValue op_space_entangling_power(const ComplexMatrix& u,
                                      const Bipartition& bip);

/// Symmetric-bipartition form in terms of E(U), E(US) and d.
double ep_symmetric(double e_u, double e_us, std::size_t d);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
};

/// Monte-Carlo settings. Samples are drawn in fixed-size batches, each from
/// its own child stream of `rng`, so results do not depend on `jobs`.
struct McOptions {
  std::size_t nsamples = 2000;
  std::size_t batch = 50;
  std::size_t jobs = 0;
};

/// Sample mean of E(U (X (x) Y) U^dagger) over Haar X on A and Y on B.
McEstimate mc_entangling_power(const ComplexMatrix& u, const Bipartition& bip,
                               const SeededStream& rng,
                               const McOptions& opt = {});

/// Sample mean of S_lin[Tr_A(U |psi phi><psi phi| U^dagger)] over Haar
/// product states.
McEstimate mc_state_entangling_power(const ComplexMatrix& u,
                                     const Bipartition& bip,
                                     const SeededStream& rng,
                                     const McOptions& opt = {});

/// State-space entangling power. Symmetric bipartitions use the closed form
/// in E(U), E(US); otherwise the Monte-Carlo estimate above is returned.
MetricValue state_entangling_power(const ComplexMatrix& u,
                                   const Bipartition& bip,
                                   const SeededStream& rng,
                                   const McOptions& opt = {});

enum class EntropySide { AB, AA };

struct EntropyIdentity {
  MetricValue lhs;
  double rhs_mc = 0.0;
  double std_error = 0.0;
};

/// Compares S(U(A):B) (side AB) or S(U(A):A) (side AA) with its expression
/// as an average linear entropy over states |psi><psi| (x) 1_B / dB with Haar
/// |psi> on A. Requires nsamples >= 100.
EntropyIdentity entropy_identity_check(const ComplexMatrix& u,
                                       const Bipartition& bip,
                                       EntropySide side,
                                       const SeededStream& rng,
                                       const McOptions& opt = {});

struct TypicalValues {
  double ep_bound = 0.0;
  double s_ab_star = 0.0;
  double s_aa_star = 0.0;
};
TypicalValues typical_values(const Bipartition& bip);

struct FeasibilityCoords {
  double I1 = 0.0;
  double I2 = 0.0;
};
/// Two-qubit coordinates I1 = 1 - 4/3 E(U), I2 = 1 - 4/3 E(US).
FeasibilityCoords feasibility_coords(const ComplexMatrix& u);

/// Second Renyi entropy from the linear entropy, S2 = -ln(1 - S_lin).
double renyi2_from_linear(double s_lin);

}  // namespace opent
