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

#include "opent/metrics.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "opent/errors.hpp"
#include "opent/parallel.hpp"
#include "opent/stats.hpp"

namespace opent {
namespace {

constexpr double kSideTol = 1e-12;
constexpr double kFormTol = 1e-12;

double sq(double x) { return x * x; }

// Runs `sample(stream, out)` for every sample index, batch by batch.
template <class F>
McEstimate run_mc(std::size_t nsamples, const SeededStream& rng,
                  const McOptions& opt, F&& sample) {
  if (nsamples == 0) throw InputError("Monte-Carlo needs nsamples >= 1");
  const std::size_t batch = opt.batch ? opt.batch : 50;
  const std::size_t nbatches = (nsamples + batch - 1) / batch;
  std::vector<double> values(nsamples);
  parallel_for(nbatches, opt.jobs, [&](std::size_t b) {
    SeededStream s = rng.child(b);
    const std::size_t lo = b * batch;
    const std::size_t hi = std::min(nsamples, lo + batch);
    for (std::size_t i = lo; i < hi; ++i) values[i] = sample(s);
  });
  const auto ms = stats::mean_stderr(values);
  return {ms.mean, ms.std_error, ms.n};
}

// Factor-swapped view of an operator on A (x) B as one on B (x) A.
ComplexMatrix relabel(const ComplexMatrix& u, const Bipartition& bip) {
  const std::size_t dims[] = {bip.dA, bip.dB};
  const std::size_t perm[] = {1, 0};
  return permute_operator(u, dims, perm);
}

double linear_entropy(const ComplexMatrix& rho) {
  return 1.0 - two_norm_sq(rho);
}

}  // namespace

const char* to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::E: return "E";
    case MetricKind::E_swapped: return "E_US";
    case MetricKind::S_AB: return "S_AB";
    case MetricKind::S_AA: return "S_AA";
    case MetricKind::Ep: return "Ep";
    case MetricKind::ep: return "ep";
  }
  return "?";
}

void require_unitary(const ComplexMatrix& u, const Bipartition& bip) {
  if (static_cast<std::size_t>(u.rows()) != bip.d() ||
      static_cast<std::size_t>(u.cols()) != bip.d()) {
    throw InputError("expected a " + std::to_string(bip.d()) + "x" +
                     std::to_string(bip.d()) + " matrix, got " +
                     std::to_string(u.rows()) + "x" +
                     std::to_string(u.cols()));
  }
  const double defect = unitarity_defect(u);
  if (defect > kUnitaryTol) {
    throw InputError("matrix is not unitary (max |U^dagger U - 1| = " +
                     std::to_string(defect) + ")");
  }
}

MetricValue op_entanglement(const ComplexMatrix& u, const Bipartition& bip) {
  require_unitary(u, bip);
  const double d2 = sq(static_cast<double>(bip.d()));
  const ComplexMatrix r = realign(u, bip);
  // The A-side trace is ||R R^dagger||^2 and the B-side one ||R^dagger R||^2.
  const double side_a = two_norm_sq(ComplexMatrix(r * r.adjoint())) / d2;
  const double side_b = two_norm_sq(ComplexMatrix(r.adjoint() * r)) / d2;
  if (std::abs(side_a - side_b) > kSideTol) {
    throw ComputeError("operator entanglement differs between the A and B "
                       "swaps by " + std::to_string(side_a - side_b));
  }
  return {1.0 - side_a, MetricKind::E, bip, false};
}

MetricValue op_entanglement_swapped(const ComplexMatrix& u,
                                    const Bipartition& bip) {
  if (!bip.is_symmetric()) {
    throw InputError("E(US) needs a symmetric bipartition");
  }
  require_unitary(u, bip);
  const double d2 = sq(static_cast<double>(bip.d()));
  const double v = 1.0 - gram_norm_sq(realign_cross(u, bip)) / d2;
  return {v, MetricKind::E_swapped, bip, false};
}

double op_entanglement_value(const ComplexMatrix& u, const Bipartition& bip) {
  const double d2 = sq(static_cast<double>(bip.d()));
  return 1.0 - gram_norm_sq(realign(u, bip)) / d2;
}

double op_entanglement_swapped_value(const ComplexMatrix& u,
                                     const Bipartition& bip) {
  const double d2 = sq(static_cast<double>(bip.d()));
  return 1.0 - gram_norm_sq(realign_cross(u, bip)) / d2;
}

double schmidt_linear_entropy(const ComplexMatrix& o, const Bipartition& bip) {
  const ComplexMatrix r = realign(o, bip);
  const double tr = two_norm_sq(r);
  if (!(tr > 0.0)) {
    throw InputError("operator entanglement of the zero operator");
  }
  return 1.0 - gram_norm_sq(r) / (tr * tr);
}

MetricValue man_ab(const ComplexMatrix& u, const Bipartition& bip) {
  require_unitary(u, bip);
  const double d2 = sq(static_cast<double>(bip.d()));
  const ComplexMatrix ud = u.adjoint();
  const double v = 1.0 - gram_norm_sq(realign(ud, bip)) / d2;
  return {v, MetricKind::S_AB, bip, false};
}

MetricValue man_aa(const ComplexMatrix& u, const Bipartition& bip) {
  require_unitary(u, bip);
  const double norm =
      static_cast<double>(bip.d()) * sq(static_cast<double>(bip.dA));
  const ComplexMatrix ud = u.adjoint();
  const double v = 1.0 - gram_norm_sq(realign_cross(ud, bip)) / norm;
  return {v, MetricKind::S_AA, bip, false};
}

double ep_symmetric(double e_u, double e_us, std::size_t d) {
  const double es = 1.0 - 1.0 / static_cast<double>(d);
  const double x = e_u / es, y = e_us / es;
  return 1.0 - sq(1.0 - x) - sq(1.0 - y) - 2.0 / static_cast<double>(d) * x * y;
}

MetricValue op_space_entangling_power(const ComplexMatrix& u,
                                      const Bipartition& bip) {
  require_unitary(u, bip);
  if (bip.dA == 1 || bip.dB == 1) return {0.0, MetricKind::Ep, bip, false};
  const bool relabeled = bip.dA > bip.dB;
  const Bipartition b = relabeled ? bip.swapped() : bip;
  const ComplexMatrix w = relabeled ? relabel(u, bip) : u;

  const double a2 = sq(static_cast<double>(b.dA));
  const double b2 = sq(static_cast<double>(b.dB));
  const double saa = 1.0 - 1.0 / a2;
  const double x = man_ab(w, b).value / saa;
  const double y = man_aa(w, b).value / saa;
  const double n = (b2 / a2) * (a2 - 1.0) / (b2 - 1.0);
  const double ep =
      n * (1.0 - sq(1.0 - x) - (a2 / b2) * sq(1.0 - y) - 2.0 / b2 * x * y);

  if (b.is_symmetric()) {
    const double sym = ep_symmetric(op_entanglement(w, b).value,
                                    op_entanglement_swapped(w, b).value, b.d());
    if (std::abs(sym - ep) > kFormTol) {
      throw ComputeError("general and symmetric entangling-power forms "
                         "disagree by " + std::to_string(sym - ep));
    }
  }
  return {ep, MetricKind::Ep, bip, relabeled};
}

McEstimate mc_entangling_power(const ComplexMatrix& u, const Bipartition& bip,
                               const SeededStream& rng, const McOptions& opt) {
  require_unitary(u, bip);
  const ComplexMatrix ud = u.adjoint();
  return run_mc(opt.nsamples, rng, opt, [&](SeededStream& s) {
    const ComplexMatrix x = haar_unitary(bip.dA, s);
    const ComplexMatrix y = haar_unitary(bip.dB, s);
    const ComplexMatrix o = u * kron(x, y) * ud;
    return schmidt_linear_entropy(o, bip);
  });
}

McEstimate mc_state_entangling_power(const ComplexMatrix& u,
                                     const Bipartition& bip,
                                     const SeededStream& rng,
                                     const McOptions& opt) {
  require_unitary(u, bip);
  return run_mc(opt.nsamples, rng, opt, [&](SeededStream& s) {
    const ComplexMatrix psi = haar_state(bip.dA, s);
    const ComplexMatrix phi = haar_state(bip.dB, s);
    const ComplexMatrix out = u * kron(psi, phi);
    // Coefficients as a dA x dB matrix M; Tr_A of the state is M^T conj(M),
    // whose purity is ||M^dagger M||^2.
    ComplexMatrix m(bip.dA, bip.dB);
    for (std::size_t a = 0; a < bip.dA; ++a) {
      for (std::size_t b = 0; b < bip.dB; ++b) m(a, b) = out(a * bip.dB + b, 0);
    }
    return 1.0 - gram_norm_sq(m);
  });
}

MetricValue state_entangling_power(const ComplexMatrix& u,
                                   const Bipartition& bip,
                                   const SeededStream& rng,
                                   const McOptions& opt) {
  require_unitary(u, bip);
  if (bip.is_symmetric()) {
    const double d = static_cast<double>(bip.d());
    const double sd = std::sqrt(d);
    const double e = op_entanglement(u, bip).value +
                     op_entanglement_swapped(u, bip).value - (1.0 - 1.0 / d);
    return {d / sq(sd + 1.0) * e, MetricKind::ep, bip, false};
  }
  return {mc_state_entangling_power(u, bip, rng, opt).estimate, MetricKind::ep,
          bip, false};
}

EntropyIdentity entropy_identity_check(const ComplexMatrix& u,
                                       const Bipartition& bip,
                                       EntropySide side,
                                       const SeededStream& rng,
                                       const McOptions& opt) {
  require_unitary(u, bip);
  if (opt.nsamples < 100) {
    throw InputError("entropy identity check needs nsamples >= 100");
  }
  const double da = static_cast<double>(bip.dA);
  const double db = static_cast<double>(bip.dB);
  const std::size_t dims[] = {bip.dA, bip.dB};
  const std::size_t keep_a[] = {0};
  const std::size_t keep_b[] = {1};
  const ComplexMatrix ud = u.adjoint();
  const ComplexMatrix id_b = identity(bip.dB) / db;

  const McEstimate avg = run_mc(opt.nsamples, rng, opt, [&](SeededStream& s) {
    const ComplexMatrix psi = haar_state(bip.dA, s);
    const ComplexMatrix rho = kron(psi * psi.adjoint(), id_b);
    const ComplexMatrix out = u * rho * ud;
    const ComplexMatrix reduced = side == EntropySide::AB
                                      ? partial_trace(out, dims, keep_a)
                                      : partial_trace(out, dims, keep_b);
    return linear_entropy(reduced);
  });

  EntropyIdentity r;
  const double pref = (da + 1.0) / da;
  if (side == EntropySide::AB) {
    r.lhs = man_ab(u, bip);
    r.rhs_mc = pref * avg.estimate;
    r.std_error = pref * avg.std_error;
  } else {
    r.lhs = man_aa(u, bip);
    r.rhs_mc = pref * ((db / da) * avg.estimate + 1.0 - db / da);
    r.std_error = pref * (db / da) * avg.std_error;
  }
  return r;
}

TypicalValues typical_values(const Bipartition& bip) {
  const double a2 = sq(static_cast<double>(bip.dA));
  const double b2 = sq(static_cast<double>(bip.dB));
  const double dd = a2 * b2;
  TypicalValues t;
  if (dd <= 1.0) return t;
  t.ep_bound = (a2 - 1.0) * (b2 - 1.0) / (dd - 1.0);
  t.s_ab_star = t.ep_bound;
  t.s_aa_star = (b2 / a2) * sq(a2 - 1.0) / (dd - 1.0);
  return t;
}

FeasibilityCoords feasibility_coords(const ComplexMatrix& u) {
  if (u.rows() != 4 || u.cols() != 4) {
    throw InputError("feasibility coordinates need a 4x4 two-qubit unitary");
  }
  const Bipartition bip(2, 2);
  return {1.0 - 4.0 / 3.0 * op_entanglement(u, bip).value,
          1.0 - 4.0 / 3.0 * op_entanglement_swapped(u, bip).value};
}

double renyi2_from_linear(double s_lin) {
  if (!(s_lin < 1.0)) throw InputError("linear entropy must be below 1");
  return -std::log1p(-s_lin);
}

}  // namespace opent
