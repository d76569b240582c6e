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

// Reproducible random sampling.
//
// The generator is std::mt19937_64 (a fully specified engine). Uniform and
// normal variates are derived here rather than through the standard
// distributions, whose algorithms are implementation-defined, so a seed gives
// the same numbers with every standard library.

#include <cstdint>
#include <random>
#include <vector>

#include "opent/tensor.hpp"

namespace opent {

class SeededStream {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64/splitmix64-v1";

  explicit SeededStream(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  /// Number of 64-bit words drawn so far.
  std::uint64_t position() const { return position_; }

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();
  double uniform(double lo, double hi);
  /// Standard normal via Box-Muller; one pair is cached.
  double normal();
  /// Complex normal with E|z|^2 = 1.
  cplx complex_normal();

  /// Independent stream for worker / batch `index`, derived from the seed
  /// only (not from this stream's position).
  SeededStream child(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uint64_t position_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Haar-distributed d x d unitary: complex Ginibre matrix, Householder QR,
/// then the phases of diag(R) are moved into Q.
ComplexMatrix haar_unitary(std::size_t d, SeededStream& rng);

/// Haar-distributed unit vector, returned as a d x 1 matrix.
ComplexMatrix haar_state(std::size_t d, SeededStream& rng);

/// i.i.d. uniform draws on [lo, hi); throws InputError unless lo < hi.
std::vector<double> uniform_disorder(std::size_t count, double lo, double hi,
                                     SeededStream& rng);

}  // namespace opent
