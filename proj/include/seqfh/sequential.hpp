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
#include "seqfh/config.hpp"
#include "seqfh/linalg.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace seqfh {

// Everything the chain carries from one AP to the next. Histories are indexed
// by chain position (0-based); after step l the combiner lists hold
// V_il and A_il for i = 1..l.
struct ChainState {
  int l = 0;
  CVector s_tilde;  // compressed refined estimate (only with observations)
  CVector s_hat;    // refined estimate before compression
  CMatrix C;        // error covariance of s_tilde
  CMatrix P;        // correlation of s_hat
  CMatrix Q;        // compression noise covariance of the latest AP
  CMatrix cross;    // E{s_tilde e^H}, e = s - s_tilde
  std::vector<CMatrix> V;
  std::vector<CMatrix> A;
  std::vector<CMatrix> Qhist;

  // Per-step records kept for diagnostics and tests.
  std::vector<CMatrix> gains;
  std::vector<CMatrix> C_hist;
  std::vector<CMatrix> P_hist;
  std::vector<CVector> q_realized;
  std::vector<CompressionOutcome> outcomes;

  int K() const { return static_cast<int>(C.rows()); }
};

// C_0 = p I, s_tilde_0 = 0, P_0 = Q_0 = 0.
ChainState initial_state(int K, double p);

// Gamma_l = C H^H (H C H^H + sigma2 I)^-1, via an HPD solve.
CMatrix gain(const CMatrix& C_prev, const CMatrix& H, double sigma2);

// s_hat_l = s_tilde_{l-1} + Gamma (y - H s_tilde_{l-1})
CVector refine(const CVector& s_tilde_prev, const CMatrix& gamma, const CMatrix& H,
               const CVector& y);

// P_l = P_{l-1} + Q_{l-1} + Gamma H C_{l-1} + X H^H Gamma^H + Gamma H X^H
// where X = E{s_tilde_{l-1} e_{l-1}^H}. The five-argument overload uses the
// closed form X = -Q_{l-1}, which is exact for the first two APs of a chain.
CMatrix update_pre_compression_corr(const CMatrix& P_prev, const CMatrix& Q_prev,
                                    const CMatrix& C_prev, const CMatrix& gamma,
                                    const CMatrix& H, const CMatrix& cross_prev);
CMatrix update_pre_compression_corr(const CMatrix& P_prev, const CMatrix& Q_prev,
                                    const CMatrix& C_prev, const CMatrix& gamma,
                                    const CMatrix& H);

// X_l = X_{l-1} (I - Gamma H)^H - Q_l
CMatrix update_cross_cov(const CMatrix& cross_prev, const CMatrix& gamma, const CMatrix& H,
                         const CMatrix& Q);

// How P_l is propagated along the chain.
enum class CorrelationModel {
  kClosedForm,  // assumes E{s_tilde e^H} = -Q at every AP
  kTracked,     // carries E{s_tilde e^H} exactly
};

std::string_view to_string(CorrelationModel model);
CorrelationModel parse_correlation_model(std::string_view name);

// C_l = (I - Gamma H) C_{l-1} + Q_l
CMatrix update_error_cov(const CMatrix& C_prev, const CMatrix& gamma, const CMatrix& H,
                         const CMatrix& Q);

// Left-multiplies the existing V_i, A_i by (I - Gamma H) and appends
// V_ll = Gamma, A_ll = I.
void propagate_combiners(ChainState& state, const CMatrix& gamma, const CMatrix& H);

struct ChainInputs {
  std::vector<CMatrix> H;  // chain order
  // Received vectors y_l = H_l s + n_l. When present the estimate itself is
  // tracked and compression noise is realized from `rng`.
  std::optional<std::vector<CVector>> y;
};

// Full pass over the chain. A rate of +inf (or scheme kInfinite) disables
// compression at that AP; a rate of 0 forwards nothing and restarts the chain
// at the next AP.
ChainState run_chain(const NetworkConfig& cfg, const ChainInputs& inputs,
                     CompressionScheme scheme, const std::vector<double>& rates,
                     RandomStream* rng = nullptr,
                     CorrelationModel model = CorrelationModel::kClosedForm);

// Per-user SINR of the terminal estimate of a completed chain.
RVector chain_sinr(const ChainState& state, const std::vector<CMatrix>& H, double p,
                   double sigma2);

// s_tilde_l rebuilt from the combiner expansion sum_i V_il y_i + A_il q_i.
CVector reconstruct_estimate(const ChainState& state, const std::vector<CVector>& y);

}  // namespace seqfh
