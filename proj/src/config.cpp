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


#include "seqfh/config.hpp"

#include <cmath>

namespace seqfh {

void NetworkConfig::validate() const {
  if (L < 1) throw ConfigError("L must be positive");
  if (N < 1) throw ConfigError("N must be positive");
  if (K < 1) throw ConfigError("K must be positive");
  if (!(p > 0.0)) throw ConfigError("transmit power must be positive");
  if (!(sigma2 > 0.0)) throw ConfigError("noise variance must be positive");
  if (tau_u() <= 0) throw ConfigError("tau_c must exceed tau_p = K");
  if (!(ap_ring_radius > 0.0) || !(user_disk_radius > 0.0))
    throw ConfigError("radii must be positive");
  if (!(R_T >= 0.0)) throw ConfigError("R_T must be non-negative");
  if (trials < 1) throw ConfigError("trials must be positive");
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

}  // namespace seqfh
