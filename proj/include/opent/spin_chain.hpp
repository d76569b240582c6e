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

// Open-boundary Ising chains with longitudinal field h and site-dependent
// transverse fields g_i:
//   H = - sum_i Z_i Z_{i+1} - sum_i (h Z_i + g_i X_i).
// Site 1 is the leftmost Kronecker factor (most significant bit of the basis
// index).

#include <cstddef>
#include <string_view>
#include <vector>

#include "opent/sampling.hpp"
#include "opent/tensor.hpp"

namespace opent {

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

struct SpinChainSpec {
  std::size_t L = 2;
  double h = 0.0;
  std::vector<double> g;
  /// Throws InputError unless L is even and positive, g has L entries and
  /// 2^L fits the exact-diagonalization limit (L <= 14).
  void validate() const;
};

ComplexMatrix build_hamiltonian(const SpinChainSpec& spec);

enum class ModelPreset { Nonintegrable, Integrable, Anderson, Mbl };
/// Accepts "nonintegrable", "integrable", "anderson", "mbl".
ModelPreset parse_model(std::string_view name);
const char* to_string(ModelPreset m);
bool is_disordered(ModelPreset m);

/// Disorder-free presets ignore the stream.
SpinChainSpec model_preset(ModelPreset model, std::size_t L,
                           SeededStream& rng);

struct ScramblingRate {
  double tau_s_inv = 0.0;
};

/// Part of h orthogonal (Hilbert-Schmidt) to operators of the form
/// X_A (x) 1 + 1 (x) Y_B.
ComplexMatrix nonlocal_part(const ComplexMatrix& h, const Bipartition& bip);

/// ||nonlocal_part(h)||_2 / sqrt(d). Throws InputError for non-Hermitian h.
ScramblingRate scrambling_rate(const ComplexMatrix& h, const Bipartition& bip);

struct ShortTimeRow {
  double t = 0.0;
  double e_u = 0.0;
  double man_aa = 0.0;
  double ep = 0.0;
};

/// Exact E(U_t), S(U_t(A):A) and E_p(U_t) for U_t = exp(i t h).
std::vector<ShortTimeRow> short_time_suite(const ComplexMatrix& h,
                                           const Bipartition& bip,
                                           const std::vector<double>& t_grid);

struct TimeSeriesRow {
  double t = 0.0;
  double e_u = 0.0;
  double e_us = 0.0;
  double ep = 0.0;
  std::size_t n_realizations = 0;
};

/// Half-chain E(U_t), E(U_t S), E_p(U_t) for one fixed Hamiltonian.
std::vector<TimeSeriesRow> time_series(const SpinChainSpec& spec,
                                       const std::vector<double>& t_grid,
                                       std::size_t jobs = 0);

/// Disorder-averaged series. Realization r draws its couplings from
/// rng.child(r); averages are pairwise sums in realization order.
std::vector<TimeSeriesRow> time_series(ModelPreset model, std::size_t L,
                                       const std::vector<double>& t_grid,
                                       std::size_t realizations,
                                       const SeededStream& rng,
                                       std::size_t jobs = 0);

}  // namespace opent
