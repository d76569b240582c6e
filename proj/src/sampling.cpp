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

#include "opent/sampling.hpp"

#include <cmath>
#include <numbers>

#include "opent/errors.hpp"

namespace opent {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SeededStream::SeededStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t SeededStream::next_u64() {
  ++position_;
  return engine_();
}

double SeededStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeededStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

double SeededStream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // 1 - u lies in (0, 1], keeping the logarithm finite.
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

cplx SeededStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

SeededStream SeededStream::child(std::uint64_t index) const {
  return SeededStream(splitmix64(seed_ ^ splitmix64(index)));
}

ComplexMatrix haar_unitary(std::size_t d, SeededStream& rng) {
  if (d == 0) throw InputError("haar_unitary: dimension must be positive");
  Eigen::MatrixXcd z(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) z(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  const Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  ComplexMatrix u(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const cplx rjj = r(j, j);
    const double mag = std::abs(rjj);
    const cplx ph = mag > 0.0 ? rjj / mag : cplx(1.0, 0.0);
    u.col(j) = q.col(j) * ph;
  }
  return u;
}

ComplexMatrix haar_state(std::size_t d, SeededStream& rng) {
  if (d == 0) throw InputError("haar_state: dimension must be positive");
  ComplexMatrix psi(d, 1);
  for (std::size_t i = 0; i < d; ++i) psi(i, 0) = rng.complex_normal();
  psi /= psi.norm();
  return psi;
}

std::vector<double> uniform_disorder(std::size_t count, double lo, double hi,
                                     SeededStream& rng) {
  if (!(lo < hi)) {
    throw InputError("uniform_disorder: need lo < hi");
  }
  std::vector<double> out(count);
  for (auto& v : out) v = rng.uniform(lo, hi);
  return out;
}

}  // namespace opent
