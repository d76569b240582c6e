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

// Steepest ascent of the operator-space entangling power on U(d) for a
// symmetric bipartition d = d_side^2, using geodesic steps
// U <- exp(mu G) U along the Riemannian gradient direction G.

#include <cstddef>
#include <cstdint>

#include "opent/errors.hpp"
#include "opent/sampling.hpp"
#include "opent/tensor.hpp"

namespace opent {

struct AscentState {
  ComplexMatrix u;
  double ep = 0.0;
  double mu = 0.0;
  std::size_t iteration = 0;
  double epsilon = 1e-16;
  bool converged = false;
};

struct AscentOptions {
  double epsilon = 1e-16;
  std::size_t max_iterations = 100000;
  std::size_t reunitarize_every = 50;
  std::size_t max_halvings = 60;
  double initial_step_scale = 0.1;
};

/// Thrown when the iteration cap is hit; carries the best state reached.
class AscentError : public ComputeError {
 public:
  AscentError(const std::string& what, AscentState best)
      : ComputeError(what), best_(std::move(best)) {}
  const AscentState& best() const { return best_; }

 private:
  AscentState best_;
};

/// Gradient of E(U) with respect to conj(U): -(2/d^2) unrealign(R R^dagger R).
ComplexMatrix grad_op_entanglement(const ComplexMatrix& u,
                                   const Bipartition& bip);
/// Same for E(U S), through the cross realignment.
ComplexMatrix grad_op_entanglement_swapped(const ComplexMatrix& u,
                                           const Bipartition& bip);

/// Euclidean gradient Gamma of E_p with respect to conj(U), normalized so
/// that dE_p = 2 Re Tr(Gamma^dagger dU). Symmetric bipartitions only.
ComplexMatrix euclidean_gradient(const ComplexMatrix& u, const Bipartition& bip);

/// G = Gamma U^dagger - U Gamma^dagger (anti-Hermitian).
ComplexMatrix riemannian_direction(const ComplexMatrix& u,
                                   const ComplexMatrix& gamma);

/// E_p for a symmetric bipartition, from E(U) and E(US).
double ep_value(const ComplexMatrix& u, const Bipartition& bip);

/// Ascent from u0. Throws AscentError after max_iterations.
AscentState ascend_from(const ComplexMatrix& u0, const Bipartition& bip,
                        const AscentOptions& opt = {});

/// Ascent from a Haar-random start drawn from rng; d_side in [2, 8].
AscentState ascend(std::size_t d_side, SeededStream& rng,
                   const AscentOptions& opt = {});

}  // namespace opent
