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

#include "opent/dual_unitary.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "opent/errors.hpp"
#include "opent/simd/kernels.hpp"
#include "opent/spin_chain.hpp"

namespace opent {
namespace {

constexpr std::size_t kMaxBrickworkDim = 4096;
constexpr std::size_t kMaxExactSites = 10;

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

void require_gate_shape(const ComplexMatrix& v, std::size_t q) {
  if (q < 2 || static_cast<std::size_t>(v.rows()) != q * q ||
      v.rows() != v.cols()) {
    throw InputError("two-site gate must be q^2 x q^2 with q >= 2");
  }
}

std::size_t infer_q(const ComplexMatrix& v) {
  const auto q = static_cast<std::size_t>(
      std::llround(std::sqrt(static_cast<double>(v.rows()))));
  require_gate_shape(v, q);
  return q;
}

void require_even_chain(std::size_t L) {
  if (L == 0 || L % 2 != 0) throw InputError("chain length L must be even");
}

}  // namespace

ComplexMatrix su2(const SU2Params& p) {
  constexpr double four_pi = 4.0 * std::numbers::pi;
  if (!(p.r >= 0.0 && p.r <= 1.0) || !(p.omega >= 0.0 && p.omega <= four_pi) ||
      !(p.theta >= 0.0 && p.theta <= four_pi)) {
    throw InputError("SU(2) parameters out of range");
  }
  const double s = std::sqrt(1.0 - p.r * p.r);
  const cplx i(0.0, 1.0);
  ComplexMatrix m(2, 2);
  m << p.r * std::exp(i * (p.omega / 2)), -s * std::exp(-i * (p.theta / 2)),
      s * std::exp(i * (p.theta / 2)), p.r * std::exp(-i * (p.omega / 2));
  return m;
}

ComplexMatrix du_gate(const DUGateSpec& spec) {
  const double quarter = std::numbers::pi / 4;
  const ComplexMatrix x = pauli_x(), y = pauli_y(), z = pauli_z();
  const ComplexMatrix gen =
      quarter * kron(x, x) + quarter * kron(y, y) + spec.J * kron(z, z);
  const ComplexMatrix core = expm_hermitian_phase(gen, -1.0);
  const cplx phase = std::exp(cplx(0.0, spec.phi));
  return phase * kron(spec.u_plus, spec.u_minus) * core *
         kron(spec.v_plus, spec.v_minus);
}

ComplexMatrix space_time_reshuffle(const ComplexMatrix& v, std::size_t q) {
  require_gate_shape(v, q);
  const std::size_t dims[] = {q, q, q, q};
  // axes (o1, o2, i1, i2) -> (o2, i2, o1, i1)
  const std::size_t perm[] = {1, 3, 0, 2};
  const auto data = permute_factors(
      {v.data(), static_cast<std::size_t>(v.size())}, dims, perm);
  ComplexMatrix w(q * q, q * q);
  std::copy(data.begin(), data.end(), w.data());
  return w;
}

DualUnitarityReport dual_unitarity_report(const ComplexMatrix& v, std::size_t q,
                                          double tol) {
  require_gate_shape(v, q);
  DualUnitarityReport r;
  r.unitarity_defect = unitarity_defect(v);
  r.dual_defect = unitarity_defect(space_time_reshuffle(v, q));
  r.ok = r.unitarity_defect <= tol && r.dual_defect <= tol;
  return r;
}

bool check_dual_unitarity(const ComplexMatrix& v, std::size_t q, double tol) {
  return dual_unitarity_report(v, q, tol).ok;
}

void apply_two_site_left(ComplexMatrix& m, const ComplexMatrix& v,
                         std::size_t q, std::size_t L, std::size_t site) {
  require_gate_shape(v, q);
  if (site + 1 >= L) throw InputError("two-site gate outside the chain");
  const std::size_t dim = ipow(q, L);
  if (static_cast<std::size_t>(m.rows()) != dim) {
    throw InputError("matrix rows do not match the chain dimension");
  }
  const std::size_t cols = static_cast<std::size_t>(m.cols());
  const std::size_t lo = ipow(q, L - 2 - site);  // stride of site + 1
  const std::size_t hi = lo * q;                 // stride of site
  const std::size_t block = hi * q;
  const std::size_t q2 = q * q;
  const auto& k = simd::active_kernels();
  std::vector<cplx> scratch(q2 * cols);
  std::vector<std::size_t> rows(q2);
  for (std::size_t outer = 0; outer < dim; outer += block) {
    for (std::size_t inner = 0; inner < lo; ++inner) {
      for (std::size_t a = 0; a < q; ++a) {
        for (std::size_t b = 0; b < q; ++b) {
          rows[a * q + b] = outer + a * hi + b * lo + inner;
        }
      }
      std::fill(scratch.begin(), scratch.end(), cplx(0.0, 0.0));
      for (std::size_t o = 0; o < q2; ++o) {
        for (std::size_t i = 0; i < q2; ++i) {
          const cplx c = v(o, i);
          if (c == cplx(0.0, 0.0)) continue;
          k.axpy(c, m.data() + rows[i] * cols, scratch.data() + o * cols, cols);
        }
      }
      for (std::size_t o = 0; o < q2; ++o) {
        std::copy(scratch.begin() + o * cols, scratch.begin() + (o + 1) * cols,
                  m.data() + rows[o] * cols);
      }
    }
  }
}

ComplexMatrix brickwork_unitary(const ComplexMatrix& v, std::size_t L,
                                std::size_t t) {
  const std::size_t q = infer_q(v);
  require_even_chain(L);
  std::size_t dim = 1;
  for (std::size_t i = 0; i < L; ++i) {
    dim *= q;
    if (dim > kMaxBrickworkDim) {
      throw InputError("brickwork dimension q^L exceeds " +
                       std::to_string(kMaxBrickworkDim));
    }
  }
  ComplexMatrix u = identity(dim);
  for (std::size_t step = 0; step < t; ++step) {
    for (std::size_t s = 0; s + 1 < L; s += 2) apply_two_site_left(u, v, q, L, s);
    for (std::size_t s = 1; s + 2 < L; s += 2) apply_two_site_left(u, v, q, L, s);
  }
  return u;
}

std::size_t t_star(std::size_t L) {
  require_even_chain(L);
  return L / 2 - L / 4;
}

double e_loc_exact(const ComplexMatrix& v, std::size_t L, std::size_t t) {
  const std::size_t q = infer_q(v);
  require_even_chain(L);
  if (L > kMaxExactSites) {
    throw InputError("exact local operator entanglement limited to L <= " +
                     std::to_string(kMaxExactSites));
  }
  const ComplexMatrix u = brickwork_unitary(v, L, t);
  const ComplexMatrix ud = u.adjoint();
  const std::size_t d = static_cast<std::size_t>(u.rows());
  const std::size_t rest = d / q;
  const Bipartition bip = Bipartition::symmetric(ipow(q, L / 2));

  // R[a q + b]: realignment of U (|a><b| (x) 1) U^dagger.
  const std::size_t q2 = q * q;
  std::vector<ComplexMatrix> r(q2);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      const ComplexMatrix o = u.middleCols(a * rest, rest) *
                              ud.middleRows(b * rest, rest);
      r[a * q + b] = realign(o, bip);
    }
  }
  // G[x][y] = R_x R_y^dagger, filled from the upper triangle.
  std::vector<std::vector<ComplexMatrix>> g(q2, std::vector<ComplexMatrix>(q2));
  for (std::size_t x = 0; x < q2; ++x) {
    for (std::size_t y = x; y < q2; ++y) {
      g[x][y] = r[x] * r[y].adjoint();
      if (y != x) g[y][x] = g[x][y].adjoint();
    }
  }

  // E_X Tr((R R^dagger)^2) with R = sum_ab X_ab R_ab. The fourth moment of a
  // Haar q x q unitary pairs row indices by sigma and column indices by tau,
  // weighted by Wg(sigma tau^-1).
  const double qq = static_cast<double>(q);
  const double wg_same = 1.0 / (qq * qq - 1.0);
  const double wg_diff = -1.0 / (qq * (qq * qq - 1.0));
  double total = 0.0;
  for (int sigma = 0; sigma < 2; ++sigma) {
    for (int tau = 0; tau < 2; ++tau) {
      const double wg = sigma == tau ? wg_same : wg_diff;
      cplx acc = 0.0;
      for (std::size_t a1 = 0; a1 < q; ++a1)
        for (std::size_t a3 = 0; a3 < q; ++a3)
          for (std::size_t b1 = 0; b1 < q; ++b1)
            for (std::size_t b3 = 0; b3 < q; ++b3) {
              const std::size_t a2 = sigma == 0 ? a1 : a3;
              const std::size_t a4 = sigma == 0 ? a3 : a1;
              const std::size_t b2 = tau == 0 ? b1 : b3;
              const std::size_t b4 = tau == 0 ? b3 : b1;
              const std::size_t x1 = a1 * q + b1, x2 = a2 * q + b2;
              const std::size_t x3 = a3 * q + b3, x4 = a4 * q + b4;
              // Tr(G12 G34) = Tr(G21^dagger G34)
              acc += hs_inner(g[x2][x1], g[x3][x4]);
            }
      total += wg * acc.real();
    }
  }
  const double dd = static_cast<double>(d);
  return 1.0 - total / (dd * dd);
}

std::vector<cplx> folded_gate(const ComplexMatrix& v, std::size_t q) {
  require_gate_shape(v, q);
  const std::size_t q2 = q * q;
  auto at = [&](std::size_t o1, std::size_t o2, std::size_t i1, std::size_t i2) {
    return v(o1 * q + o2, i1 * q + i2);
  };
  std::vector<cplx> f(q2 * q2 * q2 * q2);
  for (std::size_t o1 = 0; o1 < q2; ++o1)
    for (std::size_t o2 = 0; o2 < q2; ++o2)
      for (std::size_t i1 = 0; i1 < q2; ++i1)
        for (std::size_t i2 = 0; i2 < q2; ++i2) {
          const cplx a = at(o1 / q, o2 / q, i1 / q, i2 / q);
          const cplx b = at(o1 % q, o2 % q, i1 % q, i2 % q);
          f[((o1 * q2 + o2) * q2 + i1) * q2 + i2] = a * std::conj(b);
        }
  return f;
}

TransferSet transfer_set(const ComplexMatrix& v, std::size_t q) {
  const auto report = dual_unitarity_report(v, q);
  if (!report.ok) {
    throw InputError("transfer matrices need a dual-unitary gate (defects " +
                     std::to_string(report.unitarity_defect) + ", " +
                     std::to_string(report.dual_defect) + ")");
  }
  const std::size_t q2 = q * q;
  const double inv_q = 1.0 / static_cast<double>(q);
  // Unnormalized folded identity: circ[m q + n] = delta_mn. Two closures
  // contribute 1/q, the product of two normalized (1/sqrt q) states.
  auto circ = [&](std::size_t m) { return (m / q == m % q) ? 1.0 : 0.0; };
  const auto f = folded_gate(v, q);
  const auto fc = folded_gate(v.conjugate(), q);
  auto F = [&](const std::vector<cplx>& t, std::size_t o1, std::size_t o2,
               std::size_t i1, std::size_t i2) {
    return t[((o1 * q2 + o2) * q2 + i1) * q2 + i2];
  };

  TransferSet ts;
  ts.q = q;
  ts.m_minus = ComplexMatrix::Zero(q2, q2);
  ts.m_plus = ComplexMatrix::Zero(q2, q2);
  for (std::size_t x = 0; x < q2; ++x) {
    for (std::size_t y = 0; y < q2; ++y) {
      cplx mm = 0.0, mp = 0.0;
      for (std::size_t a = 0; a < q2; ++a) {
        if (circ(a) == 0.0) continue;
        for (std::size_t b = 0; b < q2; ++b) {
          if (circ(b) == 0.0) continue;
          mm += F(f, a, x, y, b);  // out1, in2 closed
          mp += F(f, x, a, b, y);  // out2, in1 closed
        }
      }
      ts.m_minus(x, y) = inv_q * mm;
      ts.m_plus(x, y) = inv_q * mp;
    }
  }

  // T[o2, i1, i2] = sum_a F[a, o2, i1, i2] circ[a] for both folded gates,
  // then P[(o, o'), (i, i')] = (1/q) sum_k T1[o, i, k] T2[o', i', k].
  std::vector<cplx> t1(q2 * q2 * q2), t2(q2 * q2 * q2);
  for (std::size_t o = 0; o < q2; ++o)
    for (std::size_t i = 0; i < q2; ++i)
      for (std::size_t k = 0; k < q2; ++k) {
        cplx s1 = 0.0, s2 = 0.0;
        for (std::size_t a = 0; a < q2; ++a) {
          if (circ(a) == 0.0) continue;
          s1 += F(f, a, o, i, k);
          s2 += F(fc, a, o, i, k);
        }
        t1[(o * q2 + i) * q2 + k] = s1;
        t2[(o * q2 + i) * q2 + k] = s2;
      }
  const std::size_t q4 = q2 * q2;
  ts.p = ComplexMatrix::Zero(q4, q4);
  for (std::size_t o = 0; o < q2; ++o)
    for (std::size_t op = 0; op < q2; ++op)
      for (std::size_t i = 0; i < q2; ++i)
        for (std::size_t ip = 0; ip < q2; ++ip) {
          cplx s = 0.0;
          for (std::size_t k = 0; k < q2; ++k) {
            s += t1[(o * q2 + i) * q2 + k] * t2[(op * q2 + ip) * q2 + k];
          }
          ts.p(o * q2 + op, i * q2 + ip) = inv_q * s;
        }
  return ts;
}

ComplexMatrix matrix_power(const ComplexMatrix& m, std::size_t n) {
  if (m.rows() != m.cols()) throw InputError("matrix_power: not square");
  ComplexMatrix result = identity(m.rows());
  ComplexMatrix base = m;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

double e_loc_tstar(const TransferSet& ts, std::size_t L) {
  require_even_chain(L);
  const double q2 = static_cast<double>(ts.q * ts.q);
  const std::size_t n = L / 2;
  const double p_norm = two_norm_sq(matrix_power(ts.p, n));
  const double m_norm = two_norm_sq(matrix_power(ts.m_minus, n));
  return 1.0 - 1.0 / (q2 - 1.0) - (p_norm - 2.0 * m_norm) / (q2 * (q2 - 1.0));
}

double e_loc_tstar(const ComplexMatrix& v, std::size_t L) {
  return e_loc_tstar(transfer_set(v, infer_q(v)), L);
}

double ep_of_J(double J) {
  const double c = std::cos(2.0 * J);
  return c * c / 9.0 * (7.0 - 2.0 * std::cos(4.0 * J));
}

}  // namespace opent
