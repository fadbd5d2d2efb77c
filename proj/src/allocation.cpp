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


#include "seqfh/allocation.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace seqfh {

std::string_view to_string(AllocationScheme scheme) {
  switch (scheme) {
    case AllocationScheme::kEqual:
      return "ef";
    case AllocationScheme::kLinear:
      return "lf";
    case AllocationScheme::kLog:
      return "log";
  }
  return "?";
}

AllocationScheme parse_allocation(std::string_view name) {
  if (name == "ef") return AllocationScheme::kEqual;
  if (name == "lf") return AllocationScheme::kLinear;
  if (name == "log") return AllocationScheme::kLog;
  throw std::invalid_argument("unknown allocation scheme: " + std::string(name));
}

double RateSchedule::total() const { return std::accumulate(rates.begin(), rates.end(), 0.0); }

namespace {

void check_budget(double total_rate) {
  if (!(total_rate >= 0.0)) throw std::invalid_argument("fronthaul budget must be non-negative");
}

}  // namespace

RateSchedule equal_allocation(double total_rate, int chain_length) {
  check_budget(total_rate);
  if (chain_length < 1) throw std::invalid_argument("chain length must be positive");
  return {std::vector<double>(chain_length, total_rate / chain_length), AllocationScheme::kEqual};
}

RateSchedule linear_allocation(double total_rate, int chain_length) {
  check_budget(total_rate);
  if (chain_length < 1) throw std::invalid_argument("chain length must be positive");
  RateSchedule s{std::vector<double>(chain_length), AllocationScheme::kLinear};
  const double L = chain_length;
  for (int l = 1; l <= chain_length; ++l) s.rates[l - 1] = 2.0 * total_rate * l / (L * (L + 1.0));
  return s;
}

RateSchedule log_allocation(double total_rate, int chain_length) {
  check_budget(total_rate);
  if (chain_length < 2)
    throw std::invalid_argument("logarithmic allocation needs at least two APs");
  RateSchedule s{std::vector<double>(chain_length), AllocationScheme::kLog};
  double norm = 0.0;
  for (int i = 1; i <= chain_length; ++i) norm += std::log2(static_cast<double>(i));
  for (int l = 1; l <= chain_length; ++l)
    s.rates[l - 1] = total_rate * std::log2(static_cast<double>(l)) / norm;
  return s;
}

RateSchedule allocate(AllocationScheme scheme, double total_rate, int chain_length) {
  switch (scheme) {
    case AllocationScheme::kEqual:
      return equal_allocation(total_rate, chain_length);
    case AllocationScheme::kLinear:
      return linear_allocation(total_rate, chain_length);
    case AllocationScheme::kLog:
      return log_allocation(total_rate, chain_length);
  }
  throw std::logic_error("unhandled allocation scheme");
}

double path_budget(double total_rate, int path_length, int L) {
  return total_rate * static_cast<double>(path_length) / static_cast<double>(L);
}

}  // namespace seqfh
