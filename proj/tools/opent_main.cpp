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

// Command-line front end. Every command takes --seed, --jobs and --out and
// writes its data files plus a manifest into the output directory.
//
// Exit codes: 0 success, 1 compute error, 2 input error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "opent/ascent.hpp"
#include "opent/dual_unitary.hpp"
#include "opent/errors.hpp"
#include "opent/matrix_io.hpp"
#include "opent/metrics.hpp"
#include "opent/parallel.hpp"
#include "opent/relaxation_fit.hpp"
#include "opent/spin_chain.hpp"
#include "run_support.hpp"

namespace {

using nlohmann::json;
using namespace opent;
using cli::format_double;

constexpr int kExitCompute = 1;
constexpr int kExitInput = 2;

struct Globals {
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::string out = ".";
};

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    v[k] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) /
                                  static_cast<double>(n - 1);
  }
  return v;
}

std::string finish(const Globals& g, cli::RunManifest& manifest,
                   const std::string& stem, const std::string& name,
                   const std::string& text) {
  const std::string path = cli::output_path(g.out, name);
  cli::write_text_file(path, text);
  manifest.add_output(path);
  manifest.write(g.out, stem);
  return path;
}

// ---- metrics ---------------------------------------------------------------

struct MetricsArgs {
  std::string matrix;
  std::size_t dA = 0, dB = 0;
  std::size_t nsamples = 2000;
};

int run_metrics(const Globals& g, const MetricsArgs& a) {
  const Bipartition bip(a.dA, a.dB);
  const ComplexMatrix u = read_matrix(a.matrix);
  require_unitary(u, bip);
  const SeededStream rng(g.seed);
  McOptions mc;
  mc.nsamples = a.nsamples;
  mc.jobs = g.jobs;

  json j;
  j["dA"] = a.dA;
  j["dB"] = a.dB;
  j["seed"] = g.seed;
  j["E"] = op_entanglement(u, bip).value;
  j["E_US"] = bip.is_symmetric() ? json(op_entanglement_swapped(u, bip).value)
                                 : json(nullptr);
  j["S_AB"] = man_ab(u, bip).value;
  j["S_AA"] = man_aa(u, bip).value;
  const MetricValue ep_big = op_space_entangling_power(u, bip);
  j["Ep"] = ep_big.value;
  j["Ep_relabeled"] = ep_big.relabeled;
  j["ep"] = state_entangling_power(u, bip, rng, mc).value;
  j["ep_method"] = bip.is_symmetric() ? "closed_form" : "monte_carlo";
  const TypicalValues tv = typical_values(bip);
  j["bounds"] = {{"ep_bound", tv.ep_bound},
                 {"s_ab_star", tv.s_ab_star},
                 {"s_aa_star", tv.s_aa_star}};

  const std::string text = j.dump(2) + "\n";
  cli::RunManifest manifest("metrics", g.seed);
  manifest.parameters() = {{"matrix", a.matrix}, {"dA", a.dA}, {"dB", a.dB},
                           {"nsamples", a.nsamples}};
  finish(g, manifest, "metrics", "metrics.json", text);
  std::cout << text;
  return 0;
}

// ---- fig1 / fig2 -----------------------------------------------------------

struct ChainArgs {
  std::size_t L = 8;
  std::string model;
  std::size_t points = 200;
  double tmax = 20.0;
  std::size_t realizations = 1;
};

void validate_chain(const ChainArgs& a, bool disordered_figure) {
  if (a.L < 2 || a.L > 8 || a.L % 2) {
    throw InputError("--L must be even and in [2, 8]");
  }
  const ModelPreset m = parse_model(a.model);
  if (is_disordered(m) != disordered_figure) {
    throw InputError(disordered_figure
                         ? "fig2 takes a disordered model (anderson, mbl)"
                         : "fig1 takes a clean model (nonintegrable, integrable)");
  }
  if (a.points < 2) throw InputError("--points must be >= 2");
  if (!(a.tmax > 0.0)) throw InputError("--tmax must be positive");
  if (a.realizations < 1) throw InputError("--realizations must be >= 1");
}

int run_chain_figure(const Globals& g, const ChainArgs& a, const char* name) {
  const bool disordered = std::string(name) == "fig2";
  validate_chain(a, disordered);
  const ModelPreset model = parse_model(a.model);
  const auto grid = linspace(0.0, a.tmax, a.points);
  const std::size_t reals = disordered ? a.realizations : 1;
  const auto rows =
      time_series(model, a.L, grid, reals, SeededStream(g.seed), g.jobs);

  cli::CsvWriter csv({"t", "E_U", "E_US", "Ep", "n_realizations", "seed"});
  for (const auto& r : rows) {
    csv.add_row({format_double(r.t), format_double(r.e_u), format_double(r.e_us),
                 format_double(r.ep), std::to_string(r.n_realizations),
                 std::to_string(g.seed)});
  }
  const std::string stem =
      std::string(name) + "_" + a.model + "_L" + std::to_string(a.L);
  cli::RunManifest manifest(name, g.seed);
  manifest.parameters() = {{"L", a.L},           {"model", a.model},
                           {"points", a.points}, {"tmax", a.tmax},
                           {"realizations", reals}, {"jobs", g.jobs}};
  std::cout << finish(g, manifest, stem, stem + ".csv", csv.str()) << "\n";
  return 0;
}

// ---- fig3 ------------------------------------------------------------------

struct Fig3Args {
  std::vector<std::size_t> L{8, 16, 32, 48};
  std::size_t grid = 65;
};

int run_fig3(const Globals& g, const Fig3Args& a) {
  if (a.L.empty()) throw InputError("--L needs at least one chain length");
  for (std::size_t L : a.L) {
    if (L < 2 || L % 2 || L > 4096) {
      throw InputError("--L entries must be even and in [2, 4096]");
    }
  }
  if (a.grid < 2) throw InputError("--grid must be >= 2");
  const auto js = linspace(0.0, std::numbers::pi / 4, a.grid);

  std::vector<TransferSet> sets(js.size());
  std::vector<double> ep(js.size());
  parallel_for(js.size(), g.jobs, [&](std::size_t k) {
    DUGateSpec spec;
    spec.J = js[k];
    sets[k] = transfer_set(du_gate(spec), 2);
    ep[k] = ep_of_J(js[k]);
  });
  cli::CsvWriter csv({"J", "Ep_V", "E_loc_tstar", "L"});
  for (std::size_t L : a.L) {
    std::vector<double> vals(js.size());
    parallel_for(js.size(), g.jobs,
                 [&](std::size_t k) { vals[k] = e_loc_tstar(sets[k], L); });
    for (std::size_t k = 0; k < js.size(); ++k) {
      csv.add_row({format_double(js[k]), format_double(ep[k]),
                   format_double(vals[k]), std::to_string(L)});
    }
  }
  cli::RunManifest manifest("fig3", g.seed);
  manifest.parameters() = {{"L", a.L}, {"grid", a.grid}, {"J_max", "pi/4"}};
  std::cout << finish(g, manifest, "fig3", "fig3.csv", csv.str()) << "\n";
  return 0;
}

// ---- fig4 ------------------------------------------------------------------

struct Fig4Args {
  std::size_t L = 6;
  std::size_t grid = 13;
  std::size_t steps = 12;
  double jmax = 3.0 * std::numbers::pi / 16.0;
};

int run_fig4(const Globals& g, const Fig4Args& a) {
  if (a.L < 4 || a.L > 6 || a.L % 2) throw InputError("--L must be 4 or 6");
  if (a.grid < 2) throw InputError("--grid must be >= 2");
  if (a.steps < 3) throw InputError("--steps must be >= 3");
  if (!(a.jmax > 0.0)) throw InputError("--jmax must be positive");
  const auto js = linspace(0.0, a.jmax, a.grid);
  const std::size_t ts = t_star(a.L);
  const std::size_t nt = a.steps + 1;

  std::vector<std::vector<double>> series(js.size(), std::vector<double>(nt));
  parallel_for(js.size() * nt, g.jobs, [&](std::size_t idx) {
    const std::size_t k = idx / nt, s = idx % nt;
    DUGateSpec spec;
    spec.J = js[k];
    series[k][s] = e_loc_exact(du_gate(spec), a.L, ts + s);
  });

  std::vector<double> tv(nt);
  for (std::size_t s = 0; s < nt; ++s) tv[s] = static_cast<double>(ts + s);
  cli::CsvWriter csv({"J", "t", "E_loc", "c", "lambda", "residual"});
  for (std::size_t k = 0; k < js.size(); ++k) {
    const RelaxationFit fit =
        fit_relaxation(tv, series[k], static_cast<double>(ts));
    for (std::size_t s = 0; s < nt; ++s) {
      csv.add_row({format_double(js[k]), std::to_string(ts + s),
                   format_double(series[k][s]), format_double(fit.c),
                   format_double(fit.lambda), format_double(fit.residual)});
    }
  }
  cli::RunManifest manifest("fig4", g.seed);
  manifest.parameters() = {{"L", a.L},
                           {"grid", a.grid},
                           {"steps", a.steps},
                           {"J_max", a.jmax},
                           {"t_star", ts}};
  std::cout << finish(g, manifest, "fig4", "fig4.csv", csv.str()) << "\n";
  return 0;
}

// ---- maximize --------------------------------------------------------------

struct MaximizeArgs {
  std::size_t d_side = 2;
  std::size_t restarts = 5;
  double epsilon = 1e-16;
  std::size_t max_iterations = 100000;
};

int run_maximize(const Globals& g, const MaximizeArgs& a) {
  if (a.d_side < 2 || a.d_side > 8) throw InputError("--d-side must be in [2, 8]");
  if (a.restarts < 1) throw InputError("--restarts must be >= 1");
  AscentOptions opt;
  opt.epsilon = a.epsilon;
  opt.max_iterations = a.max_iterations;

  const SeededStream root(g.seed);
  std::vector<AscentState> states(a.restarts);
  std::vector<char> capped(a.restarts, 0);
  parallel_for(a.restarts, g.jobs, [&](std::size_t r) {
    SeededStream s = root.child(r);
    try {
      states[r] = ascend(a.d_side, s, opt);
    } catch (const AscentError& e) {
      states[r] = e.best();
      capped[r] = 1;
    }
  });
  std::size_t best = 0;
  for (std::size_t r = 1; r < a.restarts; ++r) {
    if (states[r].ep > states[best].ep) best = r;
  }
  bool all_capped = true;
  for (char c : capped) all_capped = all_capped && c;

  const Bipartition bip = Bipartition::symmetric(a.d_side);
  const double bound = typical_values(bip).ep_bound;
  json j;
  j["d_side"] = a.d_side;
  j["seed"] = g.seed;
  j["iterations"] = states[best].iteration;
  j["ep_final"] = states[best].ep;
  j["bound"] = bound;
  j["gap"] = bound - states[best].ep;
  j["restarts"] = a.restarts;
  j["best_restart"] = best;
  j["converged"] = states[best].converged;

  const std::string text = j.dump(2) + "\n";
  cli::RunManifest manifest("maximize", g.seed);
  manifest.parameters() = {{"d_side", a.d_side},
                           {"restarts", a.restarts},
                           {"epsilon", a.epsilon},
                           {"max_iterations", a.max_iterations}};
  const std::string stem = "maximize_d" + std::to_string(a.d_side);
  const std::string unitary_path = cli::output_path(g.out, stem + "_unitary.bin");
  write_matrix_binary(unitary_path, states[best].u);
  manifest.add_output(unitary_path);
  finish(g, manifest, stem, stem + ".json", text);
  std::cout << text;
  if (all_capped) {
    std::cerr << "error: every restart hit the iteration cap; best state "
                 "written to "
              << unitary_path << "\n";
    return kExitCompute;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operator entanglement and entangling-power toolkit"};
  app.set_version_flag("--version", std::string(OPENT_VERSION));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "PRNG seed (u64)");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1, 1024));
  app.add_option("--out", g.out, "output directory");

  MetricsArgs ma;
  auto* metrics = app.add_subcommand("metrics", "metrics of a unitary in a file");
  metrics->add_option("--matrix", ma.matrix, "binary or JSON-lines matrix file")
      ->required();
  metrics->add_option("--dA", ma.dA, "dimension of A")->required();
  metrics->add_option("--dB", ma.dB, "dimension of B")->required();
  metrics->add_option("--nsamples", ma.nsamples,
                      "Monte-Carlo samples for asymmetric state entangling power");

  ChainArgs f1, f2;
  f1.model = "nonintegrable";
  f2.model = "anderson";
  f2.realizations = 20;
  auto* fig1 = app.add_subcommand("fig1", "clean Ising chains: E(U_t), E(U_t S), E_p");
  auto* fig2 = app.add_subcommand("fig2", "disordered chains, disorder averaged");
  for (auto [cmd, args] : {std::pair{fig1, &f1}, std::pair{fig2, &f2}}) {
    cmd->add_option("--L", args->L, "chain length (even, <= 8)");
    cmd->add_option("--model", args->model, "model preset");
    cmd->add_option("--points", args->points, "number of time points");
    cmd->add_option("--tmax", args->tmax, "final time");
  }
  fig2->add_option("--realizations", f2.realizations, "disorder realizations");

  Fig3Args f3;
  auto* fig3 = app.add_subcommand("fig3", "E_loc(t*) against E_p(V) via transfer matrices");
  fig3->add_option("--L", f3.L, "chain lengths")->delimiter(',');
  fig3->add_option("--grid", f3.grid, "J grid points on [0, pi/4]");

  Fig4Args f4;
  auto* fig4 = app.add_subcommand("fig4", "exact E_loc(t) and relaxation fits");
  fig4->add_option("--L", f4.L, "chain length (4 or 6)");
  fig4->add_option("--grid", f4.grid, "J grid points on [0, jmax]");
  fig4->add_option("--steps", f4.steps, "time steps after t*");
  fig4->add_option("--jmax", f4.jmax, "largest J");

  MaximizeArgs mx;
  auto* maximize = app.add_subcommand("maximize", "gradient ascent of E_p on U(d)");
  maximize->add_option("--d-side", mx.d_side, "sqrt(d), in [2, 8]")->required();
  maximize->add_option("--restarts", mx.restarts, "random restarts (>= 1)");
  maximize->add_option("--epsilon", mx.epsilon, "stopping threshold on |dE_p|");
  maximize->add_option("--max-iterations", mx.max_iterations, "iteration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  set_default_jobs(g.jobs);
  try {
    if (*metrics) return run_metrics(g, ma);
    if (*fig1) return run_chain_figure(g, f1, "fig1");
    if (*fig2) return run_chain_figure(g, f2, "fig2");
    if (*fig3) return run_fig3(g, f3);
    if (*fig4) return run_fig4(g, f4);
    if (*maximize) return run_maximize(g, mx);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCompute;
  }
  return kExitInput;
}
