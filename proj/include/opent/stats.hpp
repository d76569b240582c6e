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

// Small statistics helpers. Sums go through pairwise reduction so that the
// result does not depend on how work was split across threads beyond the
// fixed batch layout.

#include <cstddef>
#include <span>
#include <vector>

namespace opent::stats {

double pairwise_sum(std::span<const double> x);

struct MeanStderr {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
};
/// Sample mean and standard error (sample std / sqrt(n)); n = 1 gives
/// stderr 0.
MeanStderr mean_stderr(std::span<const double> x);

double pearson(std::span<const double> x, std::span<const double> y);
/// Spearman rank correlation with average ranks for ties.
double spearman(std::span<const double> x, std::span<const double> y);
std::vector<double> ranks(std::span<const double> x);

/// Residuals of y after subtracting its least-squares line in x.
std::vector<double> detrend_linear(std::span<const double> x,
                                   std::span<const double> y);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};
LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace opent::stats
