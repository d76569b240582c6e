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

#include "opent/relaxation_fit.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/NonLinearOptimization>

#include "opent/errors.hpp"
#include "opent/stats.hpp"

namespace opent {
namespace {

struct RelaxationResidual {
  using Scalar = double;
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  const std::vector<double>& t;
  const std::vector<double>& e;
  double t_star;

  int inputs() const { return 2; }
  int values() const { return static_cast<int>(t.size()); }

  int operator()(const Eigen::VectorXd& p, Eigen::VectorXd& r) const {
    for (std::size_t i = 0; i < t.size(); ++i) {
      r(i) = p(0) * (1.0 - std::exp(-p(1) * (t[i] - t_star))) - e[i];
    }
    return 0;
  }

  int df(const Eigen::VectorXd& p, Eigen::MatrixXd& jac) const {
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double dt = t[i] - t_star;
      const double ex = std::exp(-p(1) * dt);
      jac(i, 0) = 1.0 - ex;
      jac(i, 1) = p(0) * dt * ex;
    }
    return 0;
  }
};

}  // namespace

RelaxationFit fit_relaxation(const std::vector<double>& t,
                             const std::vector<double>& e, double t_star) {
  if (t.size() != e.size()) throw InputError("fit: t and E lengths differ");
  std::vector<double> ts, es;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] >= t_star) {
      ts.push_back(t[i]);
      es.push_back(e[i]);
    }
  }
  if (ts.size() < 4) {
    throw InputError("fit needs at least 4 points with t >= t_star, got " +
                     std::to_string(ts.size()));
  }
  bool all_zero = true;
  for (double v : es) all_zero = all_zero && v == 0.0;
  if (all_zero) {
    throw InputError("fit: series is identically zero, so c = 0 and lambda "
                     "is undetermined");
  }

  const double c0 = es.back();
  // log(1 - E/c0) = -lambda (t - t_star) along the points where it is defined.
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double u = 1.0 - es[i] / c0;
    if (u > 0.0 && ts[i] > t_star) {
      xs.push_back(ts[i] - t_star);
      ys.push_back(std::log(u));
    }
  }
  double lambda0 = 1.0;
  if (xs.size() >= 2) {
    const double slope = stats::fit_line(xs, ys).slope;
    if (slope < 0.0) lambda0 = -slope;
  }

  RelaxationResidual functor{ts, es, t_star};
  Eigen::VectorXd p(2);
  p << c0, lambda0;
  Eigen::LevenbergMarquardt<RelaxationResidual> lm(functor);
  lm.parameters.ftol = 1e-15;
  lm.parameters.xtol = 1e-15;
  lm.parameters.maxfev = 10000;
  const auto status = lm.minimize(p);
  if (status == Eigen::LevenbergMarquardtSpace::ImproperInputParameters) {
    throw ComputeError("relaxation fit: improper input to the solver");
  }
  if (!std::isfinite(p(0)) || !std::isfinite(p(1))) {
    throw ComputeError("relaxation fit diverged");
  }

  Eigen::VectorXd r(ts.size());
  functor(p, r);
  RelaxationFit fit;
  fit.c = p(0);
  fit.lambda = p(1);
  fit.residual = std::sqrt(r.squaredNorm() / static_cast<double>(ts.size()));
  if (fit.lambda < 0.0) {
    throw ComputeError("relaxation fit produced a negative rate");
  }
  return fit;
}

}  // namespace opent
