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

#include <cstddef>
#include <vector>

namespace opent {

/// Parameters of E(t) = c (1 - exp(-lambda (t - t_star))).
struct RelaxationFit {
  double c = 0.0;
  double lambda = 0.0;
  /// Root-mean-square deviation of the fitted curve from the data.
  double residual = 0.0;
};

/// Nonlinear least squares (Levenberg-Marquardt) over (c, lambda). The start
/// point is c0 = last value and lambda0 from a log-linear regression of
/// 1 - E/c0. Needs at least four points with t >= t_star; an all-zero series
/// is rejected with InputError.
RelaxationFit fit_relaxation(const std::vector<double>& t,
                             const std::vector<double>& e, double t_star);

}  // namespace opent
