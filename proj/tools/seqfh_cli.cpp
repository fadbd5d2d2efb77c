/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The seqfh Authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


// Command-line front end: Monte-Carlo sweeps over users or fronthaul budget,
// and a quick oracle self-test.

#include "CLI11.hpp"
#include "seqfh/compression.hpp"
#include "seqfh/csv.hpp"
#include "seqfh/experiment.hpp"
#include "seqfh/oracles.hpp"
#include "seqfh/sequential.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace seqfh;

constexpr const char* kUsersSweepStrategies =
    "sp-ef-wsinm,sp-lf-wsinm,tp-ef-wsinm,tp-lf-wsinm,sp-ef-infinite";
constexpr const char* kRateSweepStrategies =
    "sp-ef-eiu,sp-ef-scnm,sp-ef-wsinm,sp-lf-eiu,sp-lf-scnm,sp-lf-wsinm,"
    "tp-ef-eiu,tp-ef-scnm,tp-ef-wsinm,tp-lf-eiu,tp-lf-scnm,tp-lf-wsinm,sp-ef-infinite";

struct SweepOptions {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::string out;
  std::string strategies;
  std::string sweep;
  std::string values;
  std::optional<unsigned> workers;
  std::string correlation;
  bool check = false;
};

void add_sweep_options(CLI::App* cmd, SweepOptions& o, bool with_axis) {
  cmd->add_option("--config", o.config, "key = value experiment file")->check(CLI::ExistingFile);
  cmd->add_option("--seed", o.seed, "master random seed");
  cmd->add_option("--trials", o.trials, "Monte-Carlo drops per sweep point");
  cmd->add_option("--out", o.out, "CSV output path (stdout if omitted)");
  cmd->add_option("--strategies", o.strategies, "comma list such as sp-ef-wsinm,tp-lf-scnm");
  cmd->add_option("--values", o.values, "comma list of sweep values");
  cmd->add_option("--workers", o.workers, "worker threads (default: all cores)");
  cmd->add_option("--correlation", o.correlation,
                  "closed-form (default) | tracked propagation of the pre-compression correlation");
  cmd->add_flag("--check-reconstruction", o.check,
                "also verify each chain against its combiner expansion");
  if (with_axis) cmd->add_option("--sweep", o.sweep, "users | rate")->required();
}

int run_sweep(const SweepOptions& o, SweepAxis default_axis) {
  ExperimentSpec spec = o.config.empty() ? ExperimentSpec{} : load_experiment_config(o.config);
  spec.axis = default_axis;
  if (o.seed) spec.base.rng_seed = *o.seed;
  if (o.trials) spec.trials = *o.trials;
  if (o.workers) spec.workers = *o.workers;
  if (o.check) spec.reconstruction_check = true;
  if (!o.correlation.empty()) spec.correlation = parse_correlation_model(o.correlation);
  if (!o.out.empty()) spec.output_path = o.out;
  if (!o.strategies.empty()) spec.strategies = parse_strategy_list(o.strategies);
  if (!o.values.empty()) spec.values = parse_number_list(o.values);
  if (spec.strategies.empty())
    spec.strategies = parse_strategy_list(spec.axis == SweepAxis::kUsers ? kUsersSweepStrategies
                                                                         : kRateSweepStrategies);
  if (spec.values.empty())
    spec.values = spec.axis == SweepAxis::kUsers
                      ? std::vector<double>{1, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20}
                      : std::vector<double>{100, 200, 300, 400, 500, 600, 700, 800, 900, 1000};

  const std::vector<ResultRow> rows = run_experiment(spec);
  if (spec.output_path.empty())
    write_csv(std::cout, rows);
  else
    emit_csv(spec.output_path, rows);
  return 0;
}

struct Check {
  const char* name;
  std::function<bool()> run;
};

int run_selftest(std::uint64_t seed) {
  RandomStream rng(seed);
  const std::vector<Check> checks = {
      {"centralized equivalence (no compression)",
       [&] {
         NetworkConfig cfg;
         cfg.L = 4, cfg.N = 2, cfg.K = 3, cfg.p = 1.0, cfg.sigma2 = 0.1;
         ChainInputs in;
         for (int l = 0; l < cfg.L; ++l) in.H.push_back(oracle::random_complex(cfg.N, cfg.K, rng));
         const ChainState st = run_chain(cfg, in, CompressionScheme::kInfinite,
                                         std::vector<double>(cfg.L, INFINITY));
         CMatrix stacked(cfg.L * cfg.N, cfg.K);
         for (int l = 0; l < cfg.L; ++l) stacked.middleRows(l * cfg.N, cfg.N) = in.H[l];
         const RVector ref = oracle::centralized_sinr(stacked, cfg.p, cfg.sigma2);
         const RVector got = chain_sinr(st, in.H, cfg.p, cfg.sigma2);
         const CMatrix cref = oracle::centralized_error_cov(stacked, cfg.p, cfg.sigma2);
         return (got - ref).norm() <= 1e-8 * ref.norm() &&
                (st.C - cref).norm() <= 1e-8 * cref.norm();
       }},
      {"recursion equals combiner expansion",
       [&] {
         NetworkConfig cfg;
         cfg.L = 5, cfg.N = 3, cfg.K = 3, cfg.p = 1.0, cfg.sigma2 = 0.2;
         ChainInputs in;
         std::vector<CVector> y;
         const CVector s = draw_cn(rng, cfg.K);
         for (int l = 0; l < cfg.L; ++l) {
           in.H.push_back(oracle::random_complex(cfg.N, cfg.K, rng));
           y.push_back(in.H.back() * s + std::sqrt(cfg.sigma2) * draw_cn(rng, cfg.N));
         }
         in.y = y;
         const ChainState st = run_chain(cfg, in, CompressionScheme::kScnm,
                                         std::vector<double>(cfg.L, 4.0), &rng);
         return (reconstruct_estimate(st, y) - st.s_tilde).norm() <= 1e-9 * st.s_tilde.norm();
       }},
      {"SCNM matches grid search (K = 2)",
       [&] {
         for (int i = 0; i < 10; ++i) {
           const CMatrix P = oracle::random_psd(2, rng);
           const double rate = 1.0 + 5.0 * std::uniform_real_distribution<>(0, 1)(rng);
           const double got = std::real(scnm(P, rate).Q.trace());
           const double ref = oracle::scnm_grid_min(P, rate, RVector::Ones(2));
           if (got > ref * (1.0 + 1e-3)) return false;
         }
         return true;
       }},
      {"WSINM objective is non-increasing",
       [&] {
         for (int i = 0; i < 20; ++i) {
           const CMatrix P = oracle::random_psd(4, rng);
           InterferenceContext ctx{RVector::Random(4).cwiseAbs() + RVector::Constant(4, 1e-3)};
           const auto out = wsinm(P, 6.0, ctx);
           for (std::size_t t = 1; t < out.objective_trace.size(); ++t)
             if (out.objective_trace[t] >
                 out.objective_trace[t - 1] + 1e-12 * std::abs(out.objective_trace[t - 1]))
               return false;
         }
         return true;
       }},
  };

  int failures = 0;
  for (const Check& c : checks) {
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "  %s threw: %s\n", c.name, e.what());
    }
    std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", c.name);
    failures += ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequential-fronthaul cell-free massive MIMO uplink simulator"};
  app.require_subcommand(1);

  SweepOptions users_opts, rate_opts, generic_opts;
  auto* users = app.add_subcommand("sweep-users", "sum SE versus number of users");
  add_sweep_options(users, users_opts, false);
  auto* rate = app.add_subcommand("sweep-rate", "sum SE versus total fronthaul budget");
  add_sweep_options(rate, rate_opts, false);
  auto* sweep = app.add_subcommand("sweep", "sweep along the axis given by --sweep");
  add_sweep_options(sweep, generic_opts, true);

  std::uint64_t selftest_seed = 7;
  auto* selftest = app.add_subcommand("selftest", "run oracle and invariant checks");
  selftest->add_option("--seed", selftest_seed, "random seed for the generated instances");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*users) return run_sweep(users_opts, SweepAxis::kUsers);
    if (*rate) return run_sweep(rate_opts, SweepAxis::kRate);
    if (*sweep) return run_sweep(generic_opts, parse_sweep_axis(generic_opts.sweep));
    if (*selftest) return run_selftest(selftest_seed);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
