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

#include "opent/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "opent/errors.hpp"

namespace opent::stats {

double pairwise_sum(std::span<const double> x) {
  if (x.size() <= 8) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
  }
  const std::size_t half = x.size() / 2;
  return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

MeanStderr mean_stderr(std::span<const double> x) {
  MeanStderr out;
  out.n = x.size();
  if (x.empty()) return out;
  out.mean = pairwise_sum(x) / static_cast<double>(x.size());
  if (x.size() < 2) return out;
  std::vector<double> dev(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    dev[i] = (x[i] - out.mean) * (x[i] - out.mean);
  }
  const double var = pairwise_sum(dev) / static_cast<double>(x.size() - 1);
  out.std_error = std::sqrt(var / static_cast<double>(x.size()));
  return out;
}

namespace {
void require_paired(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InputError("paired statistics need two equal-length series of "
                     "length >= 2");
  }
}
}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
  require_paired(x, y);
  const double n = static_cast<double>(x.size());
  const double mx = pairwise_sum(x) / n, my = pairwise_sum(y) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

std::vector<double> ranks(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && x[order[j + 1]] == x[order[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) r[order[k]] = avg;
    i = j + 1;
  }
  return r;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  require_paired(x, y);
  const auto rx = ranks(x), ry = ranks(y);
  return pearson(rx, ry);
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  require_paired(x, y);
  const double n = static_cast<double>(x.size());
  const double mx = pairwise_sum(x) / n, my = pairwise_sum(y) / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  LineFit f;
  f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  return f;
}

std::vector<double> detrend_linear(std::span<const double> x,
                                   std::span<const double> y) {
  const LineFit f = fit_line(x, y);
  std::vector<double> r(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    r[i] = y[i] - (f.slope * x[i] + f.intercept);
  }
  return r;
}

}  // namespace opent::stats
