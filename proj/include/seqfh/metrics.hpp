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

#include "seqfh/compression.hpp"
#include "seqfh/linalg.hpp"

#include <span>

namespace seqfh {

struct SeReport {
  RVector sinr;
  RVector se;
  double sum_se = 0.0;
  double prelog = 0.0;
};

// SINR of every user for an estimate terminated at chain position l, where
//   channels[i]  H_i for the i-th AP in chain order (i < l)
//   V[i], A[i]   signal and compression-noise combiners V_il, A_il
//   prior_Q[i]   Q_i for i < l - 1 (everything but the current AP)
//   current_Q    Q_l
RVector sinr_chain(std::span<const CMatrix> channels, std::span<const CMatrix> V,
                   std::span<const CMatrix> A, std::span<const CMatrix> prior_Q,
                   const CMatrix& current_Q, double p, double sigma2);

// Denominator of sinr_chain with the current AP's Q_l[k, k] left out.
InterferenceContext interference_context(std::span<const CMatrix> channels,
                                         std::span<const CMatrix> V,
                                         std::span<const CMatrix> A,
                                         std::span<const CMatrix> prior_Q, double p,
                                         double sigma2);

SeReport se_from_sinr(const RVector& sinr, int tau_u, int tau_c);

// Effective channel G = sum_i V_i H_i.
CMatrix effective_channel(std::span<const CMatrix> channels, std::span<const CMatrix> V);

}  // namespace seqfh
