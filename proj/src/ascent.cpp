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

#include "opent/ascent.hpp"

#include <cmath>
#include <string>

#include "opent/metrics.hpp"

namespace opent {
namespace {

constexpr double kReunitarizeTol = 1e-14;

void require_symmetric(const Bipartition& bip) {
  if (!bip.is_symmetric()) {
    throw InputError("entangling-power ascent needs a symmetric bipartition");
  }
}

struct Values {
  double e_u, e_us;
};

Values metric_values(const ComplexMatrix& u, const Bipartition& bip) {
  return {op_entanglement_value(u, bip), op_entanglement_swapped_value(u, bip)};
}

}  // namespace

ComplexMatrix grad_op_entanglement(const ComplexMatrix& u,
                                   const Bipartition& bip) {
  const double d2 = static_cast<double>(bip.d() * bip.d());
  const ComplexMatrix r = realign(u, bip);
  const ComplexMatrix grr = (r * r.adjoint()) * r;
  return unrealign(grr, bip) * (-2.0 / d2);
}

ComplexMatrix grad_op_entanglement_swapped(const ComplexMatrix& u,
                                           const Bipartition& bip) {
  const double d2 = static_cast<double>(bip.d() * bip.d());
  const ComplexMatrix q = realign_cross(u, bip);
  const ComplexMatrix gqq = (q * q.adjoint()) * q;
  return unrealign_cross(gqq, bip) * (-2.0 / d2);
}

double ep_value(const ComplexMatrix& u, const Bipartition& bip) {
  require_symmetric(bip);
  const Values v = metric_values(u, bip);
  return ep_symmetric(v.e_u, v.e_us, bip.d());
}

ComplexMatrix euclidean_gradient(const ComplexMatrix& u, const Bipartition& bip) {
  require_symmetric(bip);
  require_unitary(u, bip);
  const double d = static_cast<double>(bip.d());
  const double es = 1.0 - 1.0 / d;
  const Values v = metric_values(u, bip);
  const double x = v.e_u / es, y = v.e_us / es;
  return (2.0 / es) * ((1.0 - x - y / d) * grad_op_entanglement(u, bip) +
                       (1.0 - y - x / d) * grad_op_entanglement_swapped(u, bip));
}

ComplexMatrix riemannian_direction(const ComplexMatrix& u,
                                   const ComplexMatrix& gamma) {
  const ComplexMatrix x = gamma * u.adjoint();
  return x - x.adjoint();
}

AscentState ascend_from(const ComplexMatrix& u0, const Bipartition& bip,
                        const AscentOptions& opt) {
  require_symmetric(bip);
  require_unitary(u0, bip);
  AscentState s;
  s.u = u0;
  s.ep = ep_value(u0, bip);
  s.epsilon = opt.epsilon;
  bool first = true;

  while (s.iteration < opt.max_iterations) {
    const ComplexMatrix gamma = euclidean_gradient(s.u, bip);
    const ComplexMatrix g = riemannian_direction(s.u, gamma);
    if (first) {
      const double gn = std::sqrt(two_norm_sq(gamma));
      if (gn == 0.0) {
        s.converged = true;
        return s;
      }
      s.mu = opt.initial_step_scale / gn;
      first = false;
    }
    // exp(mu G) = exp(i mu (-i G)) with -i G Hermitian.
    const HermitianEigen eig(cplx(0.0, -1.0) * g);
    double mu = s.mu;
    bool accepted = false;
    ComplexMatrix candidate;
    double ep_new = 0.0;
    for (std::size_t h = 0; h <= opt.max_halvings; ++h) {
      candidate = eig.phase(mu) * s.u;
      ep_new = ep_value(candidate, bip);
      if (ep_new >= s.ep) {
        accepted = true;
        break;
      }
      mu *= 0.5;
    }
    ++s.iteration;
    if (!accepted) {
      s.converged = true;
      return s;
    }
    const double delta = ep_new - s.ep;
    s.u = std::move(candidate);
    s.ep = ep_new;
    s.mu = 2.0 * mu;
    if (opt.reunitarize_every && s.iteration % opt.reunitarize_every == 0 &&
        unitarity_defect(s.u) > kReunitarizeTol) {
      s.u = polar_unitary(s.u);
      s.ep = ep_value(s.u, bip);
    }
    if (std::abs(delta) <= opt.epsilon) {
      s.converged = true;
      return s;
    }
  }
  throw AscentError("ascent did not converge within " +
                        std::to_string(opt.max_iterations) + " iterations",
                    s);
}

AscentState ascend(std::size_t d_side, SeededStream& rng,
                   const AscentOptions& opt) {
  if (d_side < 2 || d_side > 8) {
    throw InputError("d_side must be in [2, 8], got " + std::to_string(d_side));
  }
  const Bipartition bip = Bipartition::symmetric(d_side);
  return ascend_from(haar_unitary(bip.d(), rng), bip, opt);
}

}  // namespace opent
