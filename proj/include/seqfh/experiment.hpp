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


#pragma once

#include "seqfh/allocation.hpp"
#include "seqfh/compression.hpp"
#include "seqfh/config.hpp"
#include "seqfh/geometry.hpp"
#include "seqfh/metrics.hpp"
#include "seqfh/sequential.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace seqfh {

enum class PathMode { kSingle, kTwo };

std::string_view to_string(PathMode mode);
PathMode parse_path_mode(std::string_view name);

struct Strategy {
  PathMode path = PathMode::kSingle;
  AllocationScheme allocation = AllocationScheme::kEqual;
  CompressionScheme compression = CompressionScheme::kWsinm;

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

// "sp-ef-wsinm" style names.
std::string to_string(const Strategy& s);
Strategy parse_strategy(std::string_view name);
std::vector<Strategy> parse_strategy_list(std::string_view comma_list);

enum class SweepAxis { kUsers, kRate };

std::string_view to_string(SweepAxis axis);
SweepAxis parse_sweep_axis(std::string_view name);

struct ExperimentSpec {
  NetworkConfig base;
  SweepAxis axis = SweepAxis::kUsers;
  std::vector<double> values;
  std::vector<Strategy> strategies;
  int trials = 200;
  std::string output_path;
  // Also draw s, n and q each trial and check the recursion against its
  // combiner expansion.
  bool reconstruction_check = false;
  CorrelationModel correlation = CorrelationModel::kClosedForm;
  // 0 = std::thread::hardware_concurrency()
  unsigned workers = 0;

  void validate() const;
};

struct ResultRow {
  double sweep = 0.0;
  Strategy strategy;
  double mean_sum_se = 0.0;
  double stderr_sum_se = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

// Per-trial sum SE for every (sweep point, strategy) pair. Failed trials hold
// NaN. Trials with the same index share layout and channels across
// strategies, and on the rate axis also across sweep points.
struct ExperimentSamples {
  std::vector<double> sweep_values;
  std::vector<Strategy> strategies;
  // samples[point][strategy][trial]
  std::vector<std::vector<std::vector<double>>> samples;
  std::uint64_t seed = 0;
};

class ExperimentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Network config for one sweep point.
NetworkConfig config_at(const ExperimentSpec& spec, double sweep_value);

// Evaluates one strategy on one channel realization.
SeReport evaluate_strategy(const NetworkConfig& cfg, const ChannelRealization& channels,
                           const Strategy& strategy,
                           CorrelationModel model = CorrelationModel::kClosedForm);

// Random stream for trial `trial` of sweep point `point`.
RandomStream trial_stream(std::uint64_t master_seed, std::size_t point, std::size_t trial);

ExperimentSamples run_experiment_samples(const ExperimentSpec& spec);

// Throws ExperimentError when more than 1% of the trials of any
// (point, strategy) pair failed.
std::vector<ResultRow> aggregate(const ExperimentSamples& samples);

std::vector<ResultRow> run_experiment(const ExperimentSpec& spec);

// Flat `key = value` config file; '#' starts a comment. Powers may be given
// in dBm (p_dbm, sigma2_dbm) or watts (p, sigma2).
ExperimentSpec load_experiment_config(const std::string& path);
void apply_config_entry(ExperimentSpec& spec, std::string_view key, std::string_view value);

std::vector<double> parse_number_list(std::string_view comma_list);

}  // namespace seqfh
