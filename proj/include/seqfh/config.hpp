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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace seqfh {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Scalar network parameters. Powers are linear watts; dBm only appears at
// parse time (see dbm_to_watts).
struct NetworkConfig {
  int L = 12;                  // access points
  int N = 10;                  // antennas per AP
  int K = 20;                  // single-antenna users
  double p = 0.1;              // per-user transmit power [W]
  double sigma2 = 3.1622776601683794e-12;  // receiver noise variance [W]
  int tau_c = 200;             // samples per coherence block
  double R_T = 500.0;          // total fronthaul bits per uplink sample
  double ap_ring_radius = 300.0;
  double user_disk_radius = 150.0;
  std::uint64_t rng_seed = 1;
  int trials = 200;

  int M() const { return L * N; }
  int tau_p() const { return K; }
  int tau_u() const { return tau_c - tau_p(); }
  double prelog() const { return static_cast<double>(tau_u()) / tau_c; }

  // Throws ConfigError when an invariant is violated.
  void validate() const;
};

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

}  // namespace seqfh
