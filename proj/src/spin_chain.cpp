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

#include "opent/spin_chain.hpp"

#include <cmath>
#include <string>

#include "opent/errors.hpp"
#include "opent/metrics.hpp"
#include "opent/parallel.hpp"
#include "opent/stats.hpp"

namespace opent {

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

void SpinChainSpec::validate() const {
  if (L == 0 || L % 2 != 0) throw InputError("chain length L must be even");
  if (L > 14) throw InputError("chain length L > 14 exceeds the dense limit");
  if (g.size() != L) {
    throw InputError("expected " + std::to_string(L) + " transverse fields, got " +
                     std::to_string(g.size()));
  }
}

ComplexMatrix build_hamiltonian(const SpinChainSpec& spec) {
  spec.validate();
  const std::size_t L = spec.L;
  const std::size_t dim = std::size_t{1} << L;
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  auto z = [&](std::size_t state, std::size_t site) {
    return ((state >> (L - 1 - site)) & 1u) ? -1.0 : 1.0;
  };
  for (std::size_t s = 0; s < dim; ++s) {
    double diag = 0.0;
    for (std::size_t i = 0; i + 1 < L; ++i) diag -= z(s, i) * z(s, i + 1);
    for (std::size_t i = 0; i < L; ++i) diag -= spec.h * z(s, i);
    h(s, s) = diag;
    for (std::size_t i = 0; i < L; ++i) {
      h(s ^ (std::size_t{1} << (L - 1 - i)), s) -= spec.g[i];
    }
  }
  return h;
}

ModelPreset parse_model(std::string_view name) {
  if (name == "nonintegrable") return ModelPreset::Nonintegrable;
  if (name == "integrable") return ModelPreset::Integrable;
  if (name == "anderson") return ModelPreset::Anderson;
  if (name == "mbl") return ModelPreset::Mbl;
  throw InputError("unknown model '" + std::string(name) +
                   "' (expected nonintegrable, integrable, anderson, mbl)");
}

const char* to_string(ModelPreset m) {
  switch (m) {
    case ModelPreset::Nonintegrable: return "nonintegrable";
    case ModelPreset::Integrable: return "integrable";
    case ModelPreset::Anderson: return "anderson";
    case ModelPreset::Mbl: return "mbl";
  }
  return "?";
}

bool is_disordered(ModelPreset m) {
  return m == ModelPreset::Anderson || m == ModelPreset::Mbl;
}

SpinChainSpec model_preset(ModelPreset model, std::size_t L,
                           SeededStream& rng) {
  SpinChainSpec s;
  s.L = L;
  switch (model) {
    case ModelPreset::Nonintegrable:
      s.h = 0.5;
      s.g.assign(L, 1.05);
      break;
    case ModelPreset::Integrable:
      s.h = 0.0;
      s.g.assign(L, 1.0);
      break;
    case ModelPreset::Anderson:
      s.h = 0.0;
      s.g = uniform_disorder(L, -10.0, 10.0, rng);
      break;
    case ModelPreset::Mbl:
      s.h = 0.5;
      s.g = uniform_disorder(L, -10.0, 10.0, rng);
      break;
  }
  s.validate();
  return s;
}

ComplexMatrix nonlocal_part(const ComplexMatrix& h, const Bipartition& bip) {
  if (static_cast<std::size_t>(h.rows()) != bip.d() || h.rows() != h.cols()) {
    throw InputError("Hamiltonian dimension does not match the bipartition");
  }
  const std::size_t dims[] = {bip.dA, bip.dB};
  const std::size_t keep_a[] = {0};
  const std::size_t keep_b[] = {1};
  const double da = static_cast<double>(bip.dA);
  const double db = static_cast<double>(bip.dB);
  const cplx tr = h.trace();
  // Subtracting both one-sided means removes the identity component twice;
  // it is added back once.
  return h - kron(identity(bip.dA) / da, partial_trace(h, dims, keep_b)) -
         kron(partial_trace(h, dims, keep_a), identity(bip.dB) / db) +
         (tr / static_cast<double>(bip.d())) * identity(bip.d());
}

ScramblingRate scrambling_rate(const ComplexMatrix& h, const Bipartition& bip) {
  if (!is_hermitian(h)) throw InputError("scrambling rate needs Hermitian H");
  const double n2 = two_norm_sq(nonlocal_part(h, bip));
  return {std::sqrt(n2 / static_cast<double>(bip.d()))};
}

std::vector<ShortTimeRow> short_time_suite(const ComplexMatrix& h,
                                           const Bipartition& bip,
                                           const std::vector<double>& t_grid) {
  const HermitianEigen eig(h);
  std::vector<ShortTimeRow> rows;
  rows.reserve(t_grid.size());
  for (double t : t_grid) {
    const ComplexMatrix u = eig.phase(t);
    rows.push_back({t, op_entanglement(u, bip).value, man_aa(u, bip).value,
                    op_space_entangling_power(u, bip).value});
  }
  return rows;
}

namespace {

struct Triple {
  double e_u, e_us, ep;
};

std::vector<Triple> evolve_metrics(const SpinChainSpec& spec,
                                   const std::vector<double>& t_grid,
                                   std::size_t jobs) {
  const ComplexMatrix h = build_hamiltonian(spec);
  const HermitianEigen eig(h);
  const Bipartition bip = Bipartition::symmetric(std::size_t{1} << (spec.L / 2));
  std::vector<Triple> out(t_grid.size());
  parallel_for(t_grid.size(), jobs, [&](std::size_t k) {
    const ComplexMatrix u = eig.phase(t_grid[k]);
    const double e_u = op_entanglement_value(u, bip);
    const double e_us = op_entanglement_swapped_value(u, bip);
    out[k] = {e_u, e_us, ep_symmetric(e_u, e_us, bip.d())};
  });
  return out;
}

}  // namespace

std::vector<TimeSeriesRow> time_series(const SpinChainSpec& spec,
                                       const std::vector<double>& t_grid,
                                       std::size_t jobs) {
  const auto m = evolve_metrics(spec, t_grid, jobs);
  std::vector<TimeSeriesRow> rows(t_grid.size());
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    rows[k] = {t_grid[k], m[k].e_u, m[k].e_us, m[k].ep, 1};
  }
  return rows;
}

std::vector<TimeSeriesRow> time_series(ModelPreset model, std::size_t L,
                                       const std::vector<double>& t_grid,
                                       std::size_t realizations,
                                       const SeededStream& rng,
                                       std::size_t jobs) {
  if (realizations == 0) throw InputError("need at least one realization");
  std::vector<std::vector<Triple>> per(realizations);
  // Realizations are the outer parallel level; the t loop inside stays
  // serial so thread counts do not multiply.
  parallel_for(realizations, jobs, [&](std::size_t r) {
    SeededStream s = rng.child(r);
    per[r] = evolve_metrics(model_preset(model, L, s), t_grid, 1);
  });
  std::vector<TimeSeriesRow> rows(t_grid.size());
  std::vector<double> a(realizations), b(realizations), c(realizations);
  const double n = static_cast<double>(realizations);
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    for (std::size_t r = 0; r < realizations; ++r) {
      a[r] = per[r][k].e_u;
      b[r] = per[r][k].e_us;
      c[r] = per[r][k].ep;
    }
    rows[k] = {t_grid[k], stats::pairwise_sum(a) / n,
               stats::pairwise_sum(b) / n, stats::pairwise_sum(c) / n,
               realizations};
  }
  return rows;
}

}  // namespace opent
