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

#include "seqfh/linalg.hpp"
#include "seqfh/sequential.hpp"

#include <utility>
#include <vector>

namespace seqfh {

// What the CPU receives from one path: s_tilde = G s + z with z ~ CN(0, Z).
struct PathSummary {
  CVector s_tilde;
  CMatrix G;
  CMatrix Z;
};

struct FusedEstimate {
  CVector y_tp;   // stacked path estimates (empty if not realized)
  CMatrix G_tp;   // 2K x K
  CMatrix Z_tp;   // blkdiag(Z1, Z2)
  CMatrix V_tp;   // K x 2K global LMMSE combiner
  CVector s_hat_tp;
};

// Two contiguous arcs of the AP ring (0-based indices). The first holds
// ceil(L/2) APs. Each path is ordered so that it ends next to the CPU, which
// sits at the location of AP L: path 1 runs from AP ceil(L/2) down to AP 1,
// path 2 runs from AP ceil(L/2)+1 up to AP L.
std::pair<std::vector<int>, std::vector<int>> split_paths(int L);

PathSummary summarize_path(const ChainState& chain, const std::vector<CMatrix>& H,
                           double sigma2);

// Global LMMSE fusion of the two path estimates.
FusedEstimate fuse(const PathSummary& first, const PathSummary& second, double p);

// LMMSE SINR for y = G s + z:  p g_k^H (p sum_{j != k} g_j g_j^H + Z)^-1 g_k.
RVector sinr_fused(const FusedEstimate& fused, double p);

// Error covariance p I - p^2 G^H (p G G^H + Z)^-1 G of the LMMSE estimate of s
// from an observation with effective channel G and noise covariance Z.
CMatrix lmmse_error_cov(const CMatrix& G, const CMatrix& Z, double p);

}  // namespace seqfh
