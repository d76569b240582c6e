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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "opent/errors.hpp"
#include "opent/metrics.hpp"
#include "opent/sampling.hpp"
#include "opent/spin_chain.hpp"
#include "opent/stats.hpp"
#include "oracles.hpp"

namespace opent {
namespace {

ComplexMatrix cnot() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

ComplexMatrix iswap() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(3, 3) = 1.0;
  m(1, 2) = m(2, 1) = cplx(0.0, 1.0);
  return m;
}

// |i, j> -> |i + j, i + 2j> (mod 3).
ComplexMatrix qutrit_perfect_tensor() {
  ComplexMatrix m = ComplexMatrix::Zero(9, 9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(((i + j) % 3) * 3 + (i + 2 * j) % 3, i * 3 + j) = 1.0;
  return m;
}

const std::vector<Bipartition> kShapes{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}};

TEST(OpEntanglement, MatchesDoubledSpaceTrace) {
  SeededStream rng(1);
  for (const auto& bip : kShapes) {
    for (int rep = 0; rep < 3; ++rep) {
      const ComplexMatrix u = haar_unitary(bip.d(), rng);
      const double e = op_entanglement(u, bip).value;
      EXPECT_NEAR(e, oracle::op_entanglement_trace(u, bip, SwapKind::AA), 1e-12);
      EXPECT_NEAR(e, oracle::op_entanglement_trace(u, bip, SwapKind::BB), 1e-12);
      EXPECT_NEAR(e, op_entanglement_value(u, bip), 1e-12);
    }
  }
}

TEST(OpEntanglement, EqualsSchmidtEntropyOfUnitary) {
  SeededStream rng(2);
  const Bipartition bip(2, 3);
  const ComplexMatrix u = haar_unitary(6, rng);
  EXPECT_NEAR(op_entanglement(u, bip).value, oracle::schmidt_entropy_svd(u, bip),
              1e-12);
}

TEST(OpEntanglement, SwappedMatchesProductWithSwap) {
  SeededStream rng(3);
  for (std::size_t side : {2u, 3u}) {
    const Bipartition bip = Bipartition::symmetric(side);
    const ComplexMatrix u = haar_unitary(bip.d(), rng);
    const double es = op_entanglement_swapped(u, bip).value;
    EXPECT_NEAR(es, oracle::op_entanglement_of_product_with_swap(u, side), 1e-12);
    EXPECT_NEAR(es, op_entanglement_swapped_value(u, bip), 1e-12);
  }
  EXPECT_THROW(op_entanglement_swapped(identity(6), Bipartition(2, 3)),
               InputError);
}

TEST(OpEntanglement, RejectsNonUnitaryAndWrongShape) {
  ComplexMatrix m = identity(4);
  m(0, 0) = 1.0 + 1e-9;
  EXPECT_THROW(op_entanglement(m, Bipartition(2, 2)), InputError);
  EXPECT_THROW(op_entanglement(identity(4), Bipartition(2, 3)), InputError);
  EXPECT_THROW(Bipartition(0, 3), InputError);
}

TEST(OpEntanglement, KnownGates) {
  const Bipartition q(2, 2);
  EXPECT_NEAR(op_entanglement(identity(4), q).value, 0.0, 1e-15);
  EXPECT_NEAR(op_entanglement(swap_operator(2), q).value, 0.75, 1e-15);
  EXPECT_NEAR(op_entanglement(cnot(), q).value, 0.5, 1e-15);
  EXPECT_NEAR(op_entanglement_swapped(identity(4), q).value, 0.75, 1e-15);
}

TEST(Man, MatchesAveragedCommutatorTrace) {
  SeededStream rng(4);
  for (const auto& bip : kShapes) {
    const ComplexMatrix u = haar_unitary(bip.d(), rng);
    EXPECT_NEAR(man_ab(u, bip).value,
                oracle::man_trace(u, bip, SwapKind::AA, SwapKind::BB), 1e-12);
    EXPECT_NEAR(man_aa(u, bip).value,
                oracle::man_trace(u, bip, SwapKind::AA, SwapKind::AA), 1e-12);
  }
}

TEST(Man, MatchesCommutatorMonteCarlo) {
  // S(U(A):B) = (1/2d) E ||[U X_A U^dagger, Y_B]||^2 sampled directly.
  SeededStream rng(5);
  const Bipartition bip(2, 3);
  const ComplexMatrix u = haar_unitary(6, rng);
  const std::size_t n = 4000;
  std::vector<double> ab(n), aa(n);
  for (std::size_t i = 0; i < n; ++i) {
    const ComplexMatrix x = u * kron(haar_unitary(2, rng), identity(3)) * u.adjoint();
    const ComplexMatrix y = kron(identity(2), haar_unitary(3, rng));
    const ComplexMatrix z = kron(haar_unitary(2, rng), identity(3));
    ab[i] = two_norm_sq(ComplexMatrix(x * y - y * x)) / 12.0;
    aa[i] = two_norm_sq(ComplexMatrix(x * z - z * x)) / 12.0;
  }
  const auto mab = stats::mean_stderr(ab), maa = stats::mean_stderr(aa);
  EXPECT_LT(std::abs(man_ab(u, bip).value - mab.mean), 4 * mab.std_error);
  EXPECT_LT(std::abs(man_aa(u, bip).value - maa.mean), 4 * maa.std_error);
}

TEST(Man, EqualsOpEntanglementForSymmetricCut) {
  SeededStream rng(6);
  const Bipartition bip(3, 3);
  const ComplexMatrix u = haar_unitary(9, rng);
  EXPECT_NEAR(man_ab(u, bip).value, op_entanglement(u, bip).value, 1e-12);
}

TEST(Ep, FixedPoints) {
  for (const auto& bip : kShapes) {
    const ComplexMatrix id = identity(bip.d());
    EXPECT_NEAR(op_space_entangling_power(id, bip).value, 0.0, 1e-12);
    EXPECT_NEAR(man_aa(id, bip).value,
                1.0 - 1.0 / static_cast<double>(bip.dA * bip.dA), 1e-12);
  }
  for (std::size_t side : {2u, 3u, 4u}) {
    const Bipartition bip = Bipartition::symmetric(side);
    const ComplexMatrix s = swap_operator(side);
    const double d = static_cast<double>(bip.d());
    EXPECT_NEAR(op_space_entangling_power(s, bip).value, 0.0, 1e-12);
    EXPECT_NEAR(op_entanglement(s, bip).value, 1.0 - 1.0 / d, 1e-12);
    SeededStream rng(0);
    EXPECT_NEAR(state_entangling_power(s, bip, rng).value, 0.0, 1e-12);
  }
}

TEST(Ep, GeneralFormMatchesSymmetricFormAndMonteCarlo) {
  SeededStream rng(7);
  for (const auto& bip : kShapes) {
    const ComplexMatrix u = haar_unitary(bip.d(), rng);
    const MetricValue ep = op_space_entangling_power(u, bip);
    EXPECT_GE(ep.value, 0.0);
    EXPECT_LE(ep.value, typical_values(bip).ep_bound + 1e-12);
    const McEstimate mc = mc_entangling_power(u, bip, rng.child(1));
    EXPECT_EQ(mc.n, 2000u);
    EXPECT_LT(std::abs(mc.estimate - ep.value), 4 * mc.std_error)
        << bip.dA << "x" << bip.dB;
  }
}

TEST(Ep, RelabelingIsReported) {
  SeededStream rng(8);
  const ComplexMatrix u = haar_unitary(6, rng);
  const MetricValue a = op_space_entangling_power(u, Bipartition(3, 2));
  EXPECT_TRUE(a.relabeled);
  EXPECT_FALSE(op_space_entangling_power(u, Bipartition(2, 3)).relabeled);
  const McEstimate mc = mc_entangling_power(u, Bipartition(3, 2), rng.child(0));
  EXPECT_LT(std::abs(mc.estimate - a.value), 4 * mc.std_error);
}

TEST(Ep, InvariantUnderLocalUnitaries) {
  SeededStream rng(9);
  for (const auto& bip : kShapes) {
    const ComplexMatrix u = haar_unitary(bip.d(), rng);
    const ComplexMatrix l = kron(haar_unitary(bip.dA, rng), haar_unitary(bip.dB, rng));
    const ComplexMatrix r = kron(haar_unitary(bip.dA, rng), haar_unitary(bip.dB, rng));
    EXPECT_NEAR(op_space_entangling_power(u, bip).value,
                op_space_entangling_power(l * u * r, bip).value, 1e-12);
  }
}

TEST(Ep, QutritPerfectTensor) {
  const Bipartition bip(3, 3);
  const ComplexMatrix p = qutrit_perfect_tensor();
  ASSERT_TRUE(is_unitary(p));
  EXPECT_NEAR(op_entanglement(p, bip).value, 8.0 / 9.0, 1e-12);
  EXPECT_NEAR(op_entanglement_swapped(p, bip).value, 8.0 / 9.0, 1e-12);
  // x = y = 1 in the symmetric form leaves 1 - 2/d.
  EXPECT_NEAR(op_space_entangling_power(p, bip).value, 1.0 - 2.0 / 9.0, 1e-12);
  EXPECT_LT(op_space_entangling_power(p, bip).value, typical_values(bip).ep_bound);
}

TEST(StateEp, TwoQubitGates) {
  const Bipartition q(2, 2);
  SeededStream rng(10);
  EXPECT_NEAR(state_entangling_power(cnot(), q, rng).value, 2.0 / 9.0, 1e-12);
  EXPECT_NEAR(state_entangling_power(iswap(), q, rng).value, 2.0 / 9.0, 1e-12);
  EXPECT_NEAR(state_entangling_power(identity(4), q, rng).value, 0.0, 1e-12);
  const McEstimate mc = mc_state_entangling_power(iswap(), q, rng.child(2));
  EXPECT_LT(std::abs(mc.estimate - 2.0 / 9.0), 4 * mc.std_error);
}

TEST(StateEp, ClosedFormMatchesMonteCarlo) {
  SeededStream rng(11);
  for (std::size_t side : {2u, 3u}) {
    const Bipartition bip = Bipartition::symmetric(side);
    const ComplexMatrix u = haar_unitary(bip.d(), rng);
    const double closed = state_entangling_power(u, bip, rng).value;
    const McEstimate mc = mc_state_entangling_power(u, bip, rng.child(3));
    EXPECT_LT(std::abs(mc.estimate - closed), 4 * mc.std_error);
  }
}

TEST(StateEp, AsymmetricUsesMonteCarlo) {
  SeededStream rng(12);
  const ComplexMatrix u = haar_unitary(6, rng);
  const MetricValue v = state_entangling_power(u, Bipartition(2, 3), rng.child(1));
  const McEstimate mc = mc_state_entangling_power(u, Bipartition(2, 3), rng.child(1));
  EXPECT_EQ(v.value, mc.estimate);
}

TEST(EntropyIdentity, BothSidesAgreeWithinErrors) {
  SeededStream rng(13);
  for (const auto& bip : kShapes) {
    const ComplexMatrix u = haar_unitary(bip.d(), rng);
    for (auto side : {EntropySide::AB, EntropySide::AA}) {
      const auto r = entropy_identity_check(u, bip, side, rng.child(5));
      EXPECT_LT(std::abs(r.lhs.value - r.rhs_mc), 4 * r.std_error + 1e-12);
    }
  }
  McOptions few;
  few.nsamples = 50;
  EXPECT_THROW(entropy_identity_check(identity(4), Bipartition(2, 2),
                                      EntropySide::AB, rng, few),
               InputError);
}

TEST(HaarAverage, MatchesTypicalValues) {
  SeededStream rng(14);
  const Bipartition bip(2, 3);
  const std::size_t n = 3000;
  std::vector<double> e(n), aa(n);
  for (std::size_t i = 0; i < n; ++i) {
    const ComplexMatrix u = haar_unitary(6, rng);
    e[i] = op_entanglement_value(u, bip);
    aa[i] = man_aa(u, bip).value;
  }
  const auto me = stats::mean_stderr(e), ma = stats::mean_stderr(aa);
  const TypicalValues t = typical_values(bip);
  EXPECT_LT(std::abs(me.mean - t.s_ab_star), 4 * me.std_error);
  EXPECT_LT(std::abs(ma.mean - t.s_aa_star), 4 * ma.std_error);
}

TEST(TypicalValues, SymmetricBound) {
  for (std::size_t side : {2u, 3u, 4u, 8u}) {
    const double d = static_cast<double>(side * side);
    EXPECT_NEAR(typical_values(Bipartition::symmetric(side)).ep_bound,
                1.0 - 2.0 / (d + 1.0), 1e-15);
  }
}

TEST(Feasibility, KnownPoints) {
  const auto id = feasibility_coords(identity(4));
  EXPECT_NEAR(id.I1, 1.0, 1e-15);
  EXPECT_NEAR(id.I2, 0.0, 1e-15);
  const auto sw = feasibility_coords(swap_operator(2));
  EXPECT_NEAR(sw.I1, 0.0, 1e-15);
  EXPECT_NEAR(sw.I2, 1.0, 1e-15);
  EXPECT_THROW(feasibility_coords(identity(6)), InputError);
}

TEST(Renyi, ConvertsLinearEntropy) {
  EXPECT_EQ(renyi2_from_linear(0.0), 0.0);
  EXPECT_NEAR(renyi2_from_linear(1.0 - std::exp(-1.0)), 1.0, 1e-15);
  EXPECT_NEAR(renyi2_from_linear(0.75), std::log(4.0), 1e-15);
  EXPECT_THROW(renyi2_from_linear(1.0), InputError);
}

TEST(MonteCarlo, IndependentOfJobCount) {
  SeededStream rng(15);
  const ComplexMatrix u = haar_unitary(4, rng);
  McOptions one, many;
  one.jobs = 1;
  many.jobs = 4;
  one.nsamples = many.nsamples = 300;
  const auto a = mc_entangling_power(u, Bipartition(2, 2), rng.child(9), one);
  const auto b = mc_entangling_power(u, Bipartition(2, 2), rng.child(9), many);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.std_error, b.std_error);
}

}  // namespace
}  // namespace opent
