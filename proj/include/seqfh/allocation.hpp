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

#include <string_view>
#include <vector>

namespace seqfh {

enum class AllocationScheme { kEqual, kLinear, kLog };

std::string_view to_string(AllocationScheme scheme);
AllocationScheme parse_allocation(std::string_view name);

// Fronthaul bits per uplink sample for each chain position, first AP first.
struct RateSchedule {
  std::vector<double> rates;
  AllocationScheme scheme = AllocationScheme::kEqual;

  double total() const;
};

RateSchedule equal_allocation(double total_rate, int chain_length);
RateSchedule linear_allocation(double total_rate, int chain_length);
// The first AP gets log2(1) = 0 bits, so chain_length must be at least 2.
RateSchedule log_allocation(double total_rate, int chain_length);

RateSchedule allocate(AllocationScheme scheme, double total_rate, int chain_length);

// Share of the network budget given to a path of path_length out of L APs.
double path_budget(double total_rate, int path_length, int L);

}  // namespace seqfh
