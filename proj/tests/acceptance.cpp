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

// Acceptance checks. Each criterion prints exactly one line
//   criterion NN: PASS|FAIL <summary>
// followed by optional indented detail lines. Exit status is 0 only when
// every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "opent/ascent.hpp"
#include "opent/dual_unitary.hpp"
#include "opent/metrics.hpp"
#include "opent/relaxation_fit.hpp"
#include "opent/sampling.hpp"
#include "opent/spin_chain.hpp"
#include "opent/stats.hpp"

namespace {

using namespace opent;
constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string summary;
  std::vector<std::string> details;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    v[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
  }
  return v;
}

ComplexMatrix haar_su2(SeededStream& rng) {
  ComplexMatrix u = haar_unitary(2, rng);
  return u / std::sqrt(u.determinant());
}

ComplexMatrix random_du(SeededStream& rng) {
  DUGateSpec s;
  s.J = rng.uniform(0.0, kPi / 2);
  s.phi = rng.uniform(0.0, 2 * kPi);
  s.u_plus = haar_su2(rng);
  s.u_minus = haar_su2(rng);
  s.v_plus = haar_su2(rng);
  s.v_minus = haar_su2(rng);
  return du_gate(s);
}

ComplexMatrix gate_at(double J) {
  DUGateSpec s;
  s.J = J;
  return du_gate(s);
}

// 1. Closed form against Monte-Carlo, 4 standard errors, >= 19/20 per shape.
Outcome c01() {
  Outcome o;
  const SeededStream root(101);
  bool ok = true;
  std::string counts;
  for (const Bipartition bip : {Bipartition(2, 2), Bipartition(2, 3), Bipartition(3, 3)}) {
    int within = 0;
    for (std::size_t i = 0; i < 20; ++i) {
      SeededStream s = root.child(bip.d() * 1000 + i);
      const ComplexMatrix u = haar_unitary(bip.d(), s);
      const double closed = op_space_entangling_power(u, bip).value;
      const McEstimate mc = mc_entangling_power(u, bip, s.child(1));
      if (std::abs(closed - mc.estimate) <= 4 * mc.std_error) ++within;
    }
    ok = ok && within >= 19;
    counts += " " + std::to_string(bip.dA) + "x" + std::to_string(bip.dB) + "=" +
              std::to_string(within) + "/20";
  }
  o.pass = ok;
  o.summary = "closed form vs Monte-Carlo (N=2000, 4 sigma):" + counts;
  return o;
}

// 2. Fixed points to 1e-12.
Outcome c02() {
  Outcome o;
  double worst = 0.0;
  for (std::size_t side : {2u, 3u, 4u}) {
    const Bipartition bip = Bipartition::symmetric(side);
    const double d = static_cast<double>(bip.d());
    const ComplexMatrix s = swap_operator(side);
    const SeededStream rng(2);
    worst = std::max({worst,
                      std::abs(op_space_entangling_power(identity(bip.d()), bip).value),
                      std::abs(op_space_entangling_power(s, bip).value),
                      std::abs(state_entangling_power(s, bip, rng).value),
                      std::abs(op_entanglement(s, bip).value - (1.0 - 1.0 / d))});
  }
  for (const Bipartition bip : {Bipartition(2, 2), Bipartition(2, 3), Bipartition(3, 2),
                                Bipartition(3, 3)}) {
    const double da2 = static_cast<double>(bip.dA * bip.dA);
    worst = std::max(worst, std::abs(man_aa(identity(bip.d()), bip).value -
                                     (1.0 - 1.0 / da2)));
  }
  o.pass = worst <= 1e-12;
  o.summary = "fixed points, max deviation " + fmt("%.3g", worst) + " (tol 1e-12)";
  return o;
}

// 3. Haar mean of E over 1e4 two-qubit unitaries.
Outcome c03() {
  Outcome o;
  SeededStream rng(303);
  const Bipartition bip(2, 2);
  std::vector<double> e(10000);
  for (auto& v : e) v = op_entanglement(haar_unitary(4, rng), bip).value;
  const auto m = stats::mean_stderr(e);
  const double expect = 0.6;
  o.pass = std::abs(m.mean - expect) <= 4 * m.std_error;
  o.summary = "Haar mean E = " + fmt("%.6f +- %.6f", m.mean, m.std_error) +
              " vs 0.6 (4 sigma)";
  return o;
}

// 4. Two-qubit feasible domain.
Outcome c04() {
  Outcome o;
  SeededStream rng(404);
  double worst_lo = 1e300, worst_hi = -1e300;
  bool ok = true;
  for (int i = 0; i < 10000; ++i) {
    const FeasibilityCoords f = feasibility_coords(haar_unitary(4, rng));
    const double lo = f.I1 + f.I2 - 1.0 / 3.0;
    const double hi = std::sqrt(std::max(f.I1, 0.0)) + std::sqrt(std::max(f.I2, 0.0)) - 1.0;
    ok = ok && lo >= -1e-10 && hi <= 1e-10 && f.I1 >= -1e-10 && f.I2 >= -1e-10;
    worst_lo = std::min(worst_lo, lo);
    worst_hi = std::max(worst_hi, hi);
  }
  o.pass = ok;
  o.summary = "feasible domain over 1e4 unitaries: min(I1+I2-1/3) = " +
              fmt("%.3g", worst_lo) + ", max(sqrt I1 + sqrt I2 - 1) = " +
              fmt("%.3g", worst_hi);
  return o;
}

// 5. Gradient ascent reaches 1 - 2/(d+1) within 1e-10 using <= 5 restarts.
Outcome c05() {
  Outcome o;
  bool ok = true;
  std::string parts;
  for (std::size_t side : {2u, 3u, 4u}) {
    const double bound = typical_values(Bipartition::symmetric(side)).ep_bound;
    const SeededStream root(505);
    double best = -1.0;
    std::size_t used = 0;
    for (std::size_t r = 0; r < 5 && bound - best > 1e-10; ++r) {
      SeededStream s = root.child(r);
      ++used;
      try {
        best = std::max(best, ascend(side, s).ep);
      } catch (const AscentError& e) {
        best = std::max(best, e.best().ep);
      }
    }
    const double gap = bound - best;
    ok = ok && std::abs(gap) <= 1e-10;
    parts += " d_side=" + std::to_string(side) + " gap=" + fmt("%.2g", gap) + " (" +
             std::to_string(used) + " restarts)";
  }
  o.pass = ok;
  o.summary = "ascent to the bound:" + parts;
  return o;
}

// 6. Short-time laws for a random two-qubit-pair Hamiltonian.
Outcome c06() {
  Outcome o;
  SeededStream rng(606);
  const Bipartition bip(2, 2);
  ComplexMatrix m(4, 4);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = rng.complex_normal();
  const ComplexMatrix h = (m + m.adjoint()) * 0.5;
  const double rate = scrambling_rate(h, bip).tau_s_inv;
  std::vector<double> ts;
  for (int k = 0; k <= 20; ++k) ts.push_back(0.002 * std::pow(10.0, k / 20.0) / rate);
  const auto rows = short_time_suite(h, bip, ts);

  // Least squares for f(t) = a t^2 + b t^3.
  auto quad_coeff = [&](auto get) {
    Eigen::MatrixXd a(rows.size(), 2);
    Eigen::VectorXd y(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double t = rows[i].t;
      a(i, 0) = t * t;
      a(i, 1) = t * t * t;
      y(i) = get(rows[i]);
    }
    return a.colPivHouseholderQr().solve(y)(0);
  };
  const double a_e = quad_coeff([](const ShortTimeRow& r) { return r.e_u; });
  const double a_p = quad_coeff([](const ShortTimeRow& r) { return r.ep; });
  const double rel_e = a_e / (2 * rate * rate) - 1.0;
  const double rel_p = a_p / (4 * rate * rate) - 1.0;

  std::vector<double> lt, ld;
  for (const auto& r : rows) {
    lt.push_back(std::log(r.t));
    ld.push_back(std::log(std::abs(r.man_aa - 0.75)));
  }
  const double slope = stats::fit_line(lt, ld).slope;
  o.pass = std::abs(rel_e) <= 0.01 && std::abs(rel_p) <= 0.01 && slope >= 2.9;
  o.summary = "short-time laws: E coeff rel.err " + fmt("%.2e", rel_e) +
              ", Ep coeff rel.err " + fmt("%.2e", rel_p) + ", man_aa slope " +
              fmt("%.3f", slope);
  return o;
}

// 7. Dual-unitarity over a 65-point J grid.
Outcome c07() {
  Outcome o;
  double worst = 0.0;
  for (double J : linspace(0.0, kPi / 4, 65)) {
    const auto r = dual_unitarity_report(gate_at(J), 2);
    worst = std::max({worst, r.unitarity_defect, r.dual_defect});
  }
  o.pass = worst <= 1e-12;
  o.summary = "dual unitarity on 65 J points, worst defect " + fmt("%.3g", worst);
  return o;
}

// 8. Transfer-matrix relations for 20 random dual-unitary gates.
Outcome c08() {
  Outcome o;
  SeededStream rng(808);
  double w29 = 0.0, w30 = 0.0, w31 = 0.0;
  for (int i = 0; i < 20; ++i) {
    const ComplexMatrix v = random_du(rng);
    const TransferSet ts = transfer_set(v, 2);
    const double e_vs = op_entanglement(v * swap_operator(2), Bipartition(2, 2)).value;
    w29 = std::max({w29, std::abs(two_norm_sq(ts.m_minus) - 4 * (1 - e_vs)),
                    std::abs(two_norm_sq(ts.m_plus) - 4 * (1 - e_vs))});
    const ComplexMatrix mm = ts.m_plus * ts.m_plus.adjoint();
    w30 = std::max(w30, std::abs(two_norm_sq(ts.p) - 4 * two_norm_sq(mm)));
    w31 = std::max({w31, std::abs(spectral_norm(ts.m_minus) - 1),
                    std::abs(spectral_norm(ts.m_plus) - 1)});
  }
  o.pass = std::max({w29, w30, w31}) <= 1e-12;
  o.summary = "transfer relations, worst deviations " + fmt("%.2g / ", w29) +
              fmt("%.2g / ", w30) + fmt("%.2g", w31) + " (tol 1e-12)";
  return o;
}

// 9. Light cone and closed form at t*.
Outcome c09() {
  Outcome o;
  SeededStream rng(909);
  std::vector<ComplexMatrix> gates{gate_at(0.0), gate_at(0.3), gate_at(kPi / 8)};
  for (int i = 0; i < 3; ++i) gates.push_back(random_du(rng));
  double cone = 0.0, closed = 0.0;
  for (const auto& v : gates) {
    for (std::size_t L : {4u, 6u, 8u}) {
      for (std::size_t t = 0; t < t_star(L); ++t) {
        cone = std::max(cone, std::abs(e_loc_exact(v, L, t)));
      }
    }
    for (std::size_t L : {4u, 6u}) {
      closed = std::max(closed, std::abs(e_loc_tstar(v, L) -
                                         e_loc_exact(v, L, t_star(L))));
    }
  }
  o.pass = cone <= 1e-12 && closed <= 1e-10;
  o.summary = "E_loc light cone max " + fmt("%.2g", cone) +
              " (tol 1e-12), closed form vs exact max " + fmt("%.2g", closed) +
              " (tol 1e-10)";
  return o;
}

// 10. E_p as a function of J.
Outcome c10() {
  Outcome o;
  double worst = 0.0;
  for (double J : linspace(0.0, kPi / 4, 65)) {
    worst = std::max(worst, std::abs(ep_of_J(J) - op_space_entangling_power(
                                                      gate_at(J), Bipartition(2, 2))
                                                      .value));
  }
  const double at_quarter = std::abs(ep_of_J(kPi / 4));
  const double at_zero = std::abs(ep_of_J(0.0) - 5.0 / 9.0);
  o.pass = worst <= 1e-12 && at_quarter <= 1e-12 && at_zero <= 1e-12;
  o.summary = "E_p(J) law vs general routine, max deviation " + fmt("%.2g", worst) +
              "; endpoints " + fmt("%.2g, %.2g", at_quarter, at_zero);
  return o;
}

// 11. Saturation of E_loc(t*) against E_p(V) at L = 48.
Outcome c11() {
  Outcome o;
  const auto js = linspace(0.0, kPi / 4, 65);
  std::vector<std::pair<double, double>> pts;
  for (double J : js) pts.emplace_back(ep_of_J(J), e_loc_tstar(gate_at(J), 48));
  std::sort(pts.begin(), pts.end());
  double worst_dip = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    worst_dip = std::min(worst_dip, pts[i].second - pts[i - 1].second);
  }
  const bool monotone = worst_dip >= -1e-9;

  double vmax = -1e300;
  for (const auto& p : pts) vmax = std::max(vmax, p.second);
  const double ep_lo = pts.front().first, ep_hi = pts.back().first;
  // Points whose E_p lies in the top 30% of the E_p range.
  const double cut = ep_lo + 0.7 * (ep_hi - ep_lo);
  double plateau_range = 0.0;
  for (const auto& p : pts) {
    if (p.first >= cut) plateau_range = std::max(plateau_range, vmax - p.second);
  }
  // The 30% of grid points with the largest E_p.
  const std::size_t top = static_cast<std::size_t>(std::ceil(0.3 * pts.size()));
  double plateau_points = 0.0;
  for (std::size_t i = pts.size() - top; i < pts.size(); ++i) {
    plateau_points = std::max(plateau_points, vmax - pts[i].second);
  }
  o.pass = monotone && plateau_range <= 1e-6;
  o.summary = "E_loc(t*) at L=48: worst decrease " + fmt("%.3g", worst_dip) +
              " (slack 1e-9), plateau spread " + fmt("%.3g", plateau_range) +
              " (tol 1e-6)";
  o.details.push_back("plateau spread over the top 30% of E_p values: " +
                      fmt("%.3g", plateau_range));
  o.details.push_back("plateau spread over the top 30% of grid points: " +
                      fmt("%.3g", plateau_points));
  return o;
}

// 12. Relaxation fits on an L = 6 scan.
Outcome c12() {
  Outcome o;
  const std::size_t L = 6, steps = 12;
  const std::size_t ts = t_star(L);
  const auto js = linspace(0.0, 3 * kPi / 16, 13);
  std::vector<double> tv;
  for (std::size_t s = 0; s <= steps; ++s) tv.push_back(static_cast<double>(ts + s));
  std::vector<double> lambdas, e_star, cs;
  for (double J : js) {
    const ComplexMatrix v = gate_at(J);
    std::vector<double> e;
    for (std::size_t s = 0; s <= steps; ++s) e.push_back(e_loc_exact(v, L, ts + s));
    const RelaxationFit f = fit_relaxation(tv, e, static_cast<double>(ts));
    lambdas.push_back(f.lambda);
    cs.push_back(f.c);
    e_star.push_back(e.front());
  }
  const double rho = stats::spearman(lambdas, e_star);
  const auto [lo, hi] = std::minmax_element(cs.begin(), cs.end());
  const double spread = (*hi - *lo) / stats::mean_stderr(cs).mean;
  o.pass = rho > 0.8 && spread < 0.10;
  o.summary = "L=6 relaxation fits: Spearman(lambda, E_loc(t*)) = " +
              fmt("%.3f", rho) + " (> 0.8), relative spread of c = " +
              fmt("%.4f", spread) + " (< 0.10)";
  return o;
}

// 13. Spin-chain time-series properties at L = 8.
Outcome c13() {
  Outcome o;
  const std::size_t L = 8;
  const auto grid = linspace(0.0, 20.0, 200);
  const double es = 1.0 - 1.0 / 256.0;
  const SeededStream root(1313);

  const auto clean = time_series(ModelPreset::Nonintegrable, L, grid, 1, root);
  double min_late = 1e300;
  for (const auto& r : clean) {
    if (r.t >= 5.0) min_late = std::min(min_late, r.e_u);
  }
  const bool scrambles = min_late > 0.9 * es;

  const auto integ = time_series(ModelPreset::Integrable, L, grid, 1, root);
  std::vector<double> t, a, b;
  for (const auto& r : integ) {
    if (r.t >= 2.0) {
      t.push_back(r.t);
      a.push_back(r.e_u);
      b.push_back(r.e_us);
    }
  }
  const double r_int =
      stats::pearson(stats::detrend_linear(t, a), stats::detrend_linear(t, b));
  const bool antiphase = r_int < -0.5;

  bool localized = true;
  std::string loc;
  for (ModelPreset m : {ModelPreset::Anderson, ModelPreset::Mbl}) {
    const auto rows = time_series(m, L, grid, 20, root.child(static_cast<int>(m)));
    double min_us = 1e300, worst_gap = -1e300;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      min_us = std::min(min_us, rows[k].e_us);
      if (rows[k].t > 0.0) worst_gap = std::max(worst_gap, rows[k].e_u - clean[k].e_u);
    }
    const bool ok = min_us >= 0.9 * es && worst_gap < 0.0;
    localized = localized && ok;
    loc += std::string(", ") + to_string(m) + ": min[E_US]/E(S) = " +
           fmt("%.4f", min_us / es) + ", max([E_U] - clean) = " +
           fmt("%.3g", worst_gap);
  }
  o.pass = scrambles && antiphase && localized;
  o.summary = "chains L=8: nonintegrable min E_U(t>=5)/E(S) = " +
              fmt("%.4f", min_late / es) + ", integrable detrended r = " +
              fmt("%.3f", r_int) + loc;
  return o;
}

const std::vector<std::function<Outcome()>> kCriteria{
    c01, c02, c03, c04, c05, c06, c07, c08, c09, c10, c11, c12, c13};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-13)")
      ->check(CLI::Range(1, 13));
  CLI11_PARSE(app, argc, argv);

  int failures = 0;
  for (int n = 1; n <= static_cast<int>(kCriteria.size()); ++n) {
    if (only != 0 && n != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = kCriteria[n - 1]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    std::printf("criterion %02d: %s %s [%.1f s]\n", n, o.pass ? "PASS" : "FAIL",
                o.summary.c_str(), secs);
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
