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


#include "seqfh/experiment.hpp"

#include "seqfh/sequential.hpp"
#include "seqfh/two_path.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

namespace seqfh {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double to_double(std::string_view s) {
  const std::string str(trim(s));
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(str, &used);
  } catch (const std::exception&) {
    throw ConfigError("not a number: '" + str + "'");
  }
  if (used != str.size()) throw ConfigError("not a number: '" + str + "'");
  return v;
}

long long to_integer(std::string_view s) {
  const std::string_view t = trim(s);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size())
    throw ConfigError("not an integer: '" + std::string(t) + "'");
  return v;
}

std::vector<double> infinite_rates(std::size_t n) {
  return std::vector<double>(n, std::numeric_limits<double>::infinity());
}

std::vector<double> path_rates(const NetworkConfig& cfg, const Strategy& strategy,
                               int path_length) {
  if (strategy.compression == CompressionScheme::kInfinite) return infinite_rates(path_length);
  const double budget = strategy.path == PathMode::kSingle
                            ? cfg.R_T
                            : path_budget(cfg.R_T, path_length, cfg.L);
  return allocate(strategy.allocation, budget, path_length).rates;
}

ChainInputs chain_inputs(const ChannelRealization& channels, const std::vector<int>& aps) {
  ChainInputs in;
  in.H.reserve(aps.size());
  for (int ap : aps) in.H.push_back(channels.H.at(ap));
  return in;
}

std::vector<int> all_aps(int L) {
  std::vector<int> aps(L);
  for (int l = 0; l < L; ++l) aps[l] = l;
  return aps;
}

std::uint32_t strategy_code(const Strategy& s) {
  return static_cast<std::uint32_t>(s.path) * 100u + static_cast<std::uint32_t>(s.allocation) * 10u +
         static_cast<std::uint32_t>(s.compression);
}

// Runs the strategy's chain(s) with realized signals and noises and checks
// that every terminal estimate equals its combiner expansion.
bool reconstruction_holds(const NetworkConfig& cfg, const ChannelRealization& channels,
                          const Strategy& strategy, CorrelationModel model, RandomStream& rng) {
  const CVector s = std::sqrt(cfg.p) * draw_cn(rng, cfg.K);
  std::vector<CVector> y;
  for (const CMatrix& H : channels.H) y.push_back(H * s + std::sqrt(cfg.sigma2) * draw_cn(rng, cfg.N));

  std::vector<std::vector<int>> paths;
  if (strategy.path == PathMode::kSingle) {
    paths.push_back(all_aps(cfg.L));
  } else {
    auto [a, b] = split_paths(cfg.L);
    paths = {a, b};
  }
  for (const auto& aps : paths) {
    ChainInputs in = chain_inputs(channels, aps);
    std::vector<CVector> path_y;
    for (int ap : aps) path_y.push_back(y[ap]);
    in.y = path_y;
    const ChainState st =
        run_chain(cfg, in, strategy.compression,
                  path_rates(cfg, strategy, static_cast<int>(aps.size())), &rng, model);
    const CVector rebuilt = reconstruct_estimate(st, path_y);
    const double scale = std::max(st.s_tilde.norm(), 1e-300);
    if ((rebuilt - st.s_tilde).norm() > 1e-9 * scale) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(PathMode mode) { return mode == PathMode::kSingle ? "sp" : "tp"; }

PathMode parse_path_mode(std::string_view name) {
  if (name == "sp") return PathMode::kSingle;
  if (name == "tp") return PathMode::kTwo;
  throw std::invalid_argument("unknown path mode: " + std::string(name));
}

std::string to_string(const Strategy& s) {
  std::string out(to_string(s.path));
  out += '-';
  out += to_string(s.allocation);
  out += '-';
  out += to_string(s.compression);
  return out;
}

Strategy parse_strategy(std::string_view name) {
  const auto parts = split(name, '-');
  if (parts.size() != 3)
    throw std::invalid_argument("strategy must look like sp-ef-wsinm, got " + std::string(name));
  return {parse_path_mode(parts[0]), parse_allocation(parts[1]), parse_compression(parts[2])};
}

std::vector<Strategy> parse_strategy_list(std::string_view comma_list) {
  std::vector<Strategy> out;
  for (auto part : split(comma_list, ','))
    if (!part.empty()) out.push_back(parse_strategy(part));
  return out;
}

std::string_view to_string(SweepAxis axis) { return axis == SweepAxis::kUsers ? "users" : "rate"; }

SweepAxis parse_sweep_axis(std::string_view name) {
  if (name == "users") return SweepAxis::kUsers;
  if (name == "rate") return SweepAxis::kRate;
  throw std::invalid_argument("unknown sweep axis: " + std::string(name));
}

std::vector<double> parse_number_list(std::string_view comma_list) {
  std::vector<double> out;
  for (auto part : split(comma_list, ','))
    if (!part.empty()) out.push_back(to_double(part));
  return out;
}

void ExperimentSpec::validate() const {
  if (values.empty()) throw ConfigError("sweep needs at least one value");
  if (strategies.empty()) throw ConfigError("at least one strategy is required");
  if (trials < 1) throw ConfigError("trials must be positive");
  for (double v : values) {
    const NetworkConfig cfg = config_at(*this, v);
    cfg.validate();
    for (const Strategy& s : strategies) {
      if (s.path == PathMode::kTwo && cfg.L < 2) throw ConfigError("two-path mode needs L >= 2");
      if (s.compression == CompressionScheme::kInfinite) continue;
      if (!(cfg.R_T > 0.0)) throw ConfigError("R_T must be positive for finite compression");
      if (s.allocation == AllocationScheme::kLog) {
        const int shortest = s.path == PathMode::kSingle ? cfg.L : cfg.L / 2;
        if (shortest < 2) throw ConfigError("logarithmic allocation needs chains of >= 2 APs");
      }
    }
  }
}

NetworkConfig config_at(const ExperimentSpec& spec, double sweep_value) {
  NetworkConfig cfg = spec.base;
  cfg.trials = spec.trials;
  if (spec.axis == SweepAxis::kUsers) {
    const double rounded = std::round(sweep_value);
    if (rounded != sweep_value || rounded < 1.0)
      throw ConfigError("user sweep values must be positive integers");
    cfg.K = static_cast<int>(rounded);
  } else {
    cfg.R_T = sweep_value;
  }
  return cfg;
}

SeReport evaluate_strategy(const NetworkConfig& cfg, const ChannelRealization& channels,
                           const Strategy& strategy, CorrelationModel model) {
  RVector sinr;
  if (strategy.path == PathMode::kSingle) {
    const ChainInputs in = chain_inputs(channels, all_aps(cfg.L));
    const ChainState st =
        run_chain(cfg, in, strategy.compression, path_rates(cfg, strategy, cfg.L), nullptr, model);
    sinr = chain_sinr(st, in.H, cfg.p, cfg.sigma2);
  } else {
    const auto [first, second] = split_paths(cfg.L);
    PathSummary summaries[2];
    int r = 0;
    for (const auto* aps : {&first, &second}) {
      const ChainInputs in = chain_inputs(channels, *aps);
      const ChainState st =
          run_chain(cfg, in, strategy.compression,
                    path_rates(cfg, strategy, static_cast<int>(aps->size())), nullptr, model);
      summaries[r++] = summarize_path(st, in.H, cfg.sigma2);
    }
    sinr = sinr_fused(fuse(summaries[0], summaries[1], cfg.p), cfg.p);
  }
  return se_from_sinr(sinr, cfg.tau_u(), cfg.tau_c);
}

RandomStream trial_stream(std::uint64_t master_seed, std::size_t point, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed & 0xffffffffu),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(point), static_cast<std::uint32_t>(trial)};
  return RandomStream(seq);
}

ExperimentSamples run_experiment_samples(const ExperimentSpec& spec) {
  spec.validate();
  ExperimentSamples out;
  out.sweep_values = spec.values;
  out.strategies = spec.strategies;
  out.seed = spec.base.rng_seed;
  const std::size_t n_strategies = spec.strategies.size();
  const std::size_t n_trials = static_cast<std::size_t>(spec.trials);

  unsigned workers = spec.workers != 0 ? spec.workers : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n_trials)));

  for (std::size_t point = 0; point < spec.values.size(); ++point) {
    const NetworkConfig cfg = config_at(spec, spec.values[point]);
    // The fronthaul budget does not change the network, so rate sweeps reuse
    // the same drops at every point.
    const std::size_t drop_key = spec.axis == SweepAxis::kRate ? 0 : point;
    std::vector<std::vector<double>> grid(
        n_strategies, std::vector<double>(n_trials, std::numeric_limits<double>::quiet_NaN()));

    auto run_trial = [&](std::size_t t) {
      RandomStream rng = trial_stream(spec.base.rng_seed, drop_key, t);
      const Layout layout = place_network(cfg, rng);
      const ChannelRealization channels = draw_channels(cfg, layout, rng);
      for (std::size_t s = 0; s < n_strategies; ++s) {
        const Strategy& strategy = spec.strategies[s];
        try {
          const double value = evaluate_strategy(cfg, channels, strategy, spec.correlation).sum_se;
          if (spec.reconstruction_check) {
            std::seed_seq seq{static_cast<std::uint32_t>(spec.base.rng_seed),
                              static_cast<std::uint32_t>(point), static_cast<std::uint32_t>(t),
                              strategy_code(strategy)};
            RandomStream noise(seq);
            if (!reconstruction_holds(cfg, channels, strategy, spec.correlation, noise)) continue;
          }
          grid[s][t] = value;
        } catch (const SolverError&) {
        } catch (const NumericalError&) {
        }
      }
    };

    if (workers == 1) {
      for (std::size_t t = 0; t < n_trials; ++t) run_trial(t);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      std::exception_ptr failure;
      std::mutex failure_mutex;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          try {
            for (std::size_t t = next++; t < n_trials; t = next++) run_trial(t);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      if (failure) std::rethrow_exception(failure);
    }
    out.samples.push_back(std::move(grid));
  }
  return out;
}

std::vector<ResultRow> aggregate(const ExperimentSamples& samples) {
  std::vector<ResultRow> rows;
  for (std::size_t point = 0; point < samples.sweep_values.size(); ++point) {
    for (std::size_t s = 0; s < samples.strategies.size(); ++s) {
      const auto& values = samples.samples[point][s];
      double sum = 0.0;
      int ok = 0;
      for (double v : values)
        if (!std::isnan(v)) {
          sum += v;
          ++ok;
        }
      const int failed = static_cast<int>(values.size()) - ok;
      if (failed > 0 && static_cast<double>(failed) > 0.01 * static_cast<double>(values.size())) {
        std::ostringstream msg;
        msg << failed << " of " << values.size() << " trials failed for strategy "
            << to_string(samples.strategies[s]) << " at sweep value "
            << samples.sweep_values[point];
        throw ExperimentError(msg.str());
      }
      ResultRow row;
      row.sweep = samples.sweep_values[point];
      row.strategy = samples.strategies[s];
      row.trials = ok;
      row.seed = samples.seed;
      row.mean_sum_se = ok > 0 ? sum / ok : std::numeric_limits<double>::quiet_NaN();
      double sq = 0.0;
      for (double v : values)
        if (!std::isnan(v)) sq += (v - row.mean_sum_se) * (v - row.mean_sum_se);
      row.stderr_sum_se = ok > 1 ? std::sqrt(sq / (ok - 1)) / std::sqrt(static_cast<double>(ok)) : 0.0;
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<ResultRow> run_experiment(const ExperimentSpec& spec) {
  return aggregate(run_experiment_samples(spec));
}

void apply_config_entry(ExperimentSpec& spec, std::string_view key, std::string_view value) {
  NetworkConfig& c = spec.base;
  if (key == "L") {
    c.L = static_cast<int>(to_integer(value));
  } else if (key == "N") {
    c.N = static_cast<int>(to_integer(value));
  } else if (key == "M") {
    const long long M = to_integer(value);
    if (c.L < 1 || M % c.L != 0) throw ConfigError("M must be a multiple of L (set L first)");
    c.N = static_cast<int>(M / c.L);
  } else if (key == "K") {
    c.K = static_cast<int>(to_integer(value));
  } else if (key == "p") {
    c.p = to_double(value);
  } else if (key == "p_dbm") {
    c.p = dbm_to_watts(to_double(value));
  } else if (key == "sigma2") {
    c.sigma2 = to_double(value);
  } else if (key == "sigma2_dbm") {
    c.sigma2 = dbm_to_watts(to_double(value));
  } else if (key == "tau_c") {
    c.tau_c = static_cast<int>(to_integer(value));
  } else if (key == "R_T") {
    c.R_T = to_double(value);
  } else if (key == "ap_ring_radius") {
    c.ap_ring_radius = to_double(value);
  } else if (key == "user_disk_radius") {
    c.user_disk_radius = to_double(value);
  } else if (key == "seed") {
    const long long seed = to_integer(value);
    if (seed < 0) throw ConfigError("seed must be non-negative");
    c.rng_seed = static_cast<std::uint64_t>(seed);
  } else if (key == "trials") {
    spec.trials = static_cast<int>(to_integer(value));
  } else if (key == "sweep") {
    spec.axis = parse_sweep_axis(trim(value));
  } else if (key == "values") {
    spec.values = parse_number_list(value);
  } else if (key == "strategies") {
    spec.strategies = parse_strategy_list(value);
  } else if (key == "out") {
    spec.output_path = std::string(trim(value));
  } else if (key == "reconstruction_check") {
    const std::string_view v = trim(value);
    if (v == "true" || v == "1")
      spec.reconstruction_check = true;
    else if (v == "false" || v == "0")
      spec.reconstruction_check = false;
    else
      throw ConfigError("expected true or false: '" + std::string(v) + "'");
  } else if (key == "correlation") {
    spec.correlation = parse_correlation_model(trim(value));
  } else if (key == "workers") {
    spec.workers = static_cast<unsigned>(to_integer(value));
  } else {
    throw ConfigError("unknown config key: " + std::string(key));
  }
}

ExperimentSpec load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  ExperimentSpec spec;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view text(line);
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    try {
      apply_config_entry(spec, trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  spec.trials = spec.trials > 0 ? spec.trials : spec.base.trials;
  spec.base.trials = spec.trials;
  return spec;
}

}  // namespace seqfh
