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


#include "seqfh/sequential.hpp"

#include "seqfh/metrics.hpp"

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

namespace seqfh {

std::string_view to_string(CorrelationModel model) {
  return model == CorrelationModel::kTracked ? "tracked" : "closed-form";
}

CorrelationModel parse_correlation_model(std::string_view name) {
  if (name == "tracked") return CorrelationModel::kTracked;
  if (name == "closed-form") return CorrelationModel::kClosedForm;
  throw std::invalid_argument("unknown correlation model: " + std::string(name));
}

ChainState initial_state(int K, double p) {
  ChainState s;
  s.C = p * CMatrix::Identity(K, K);
  s.s_tilde = CVector::Zero(K);
  s.s_hat = CVector::Zero(K);
  s.P = CMatrix::Zero(K, K);
  s.Q = CMatrix::Zero(K, K);
  s.cross = CMatrix::Zero(K, K);
  return s;
}

CMatrix gain(const CMatrix& C_prev, const CMatrix& H, double sigma2) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("noise variance must be positive");
  if (H.cols() != C_prev.rows()) throw std::invalid_argument("gain: dimension mismatch");
  const CMatrix HC = H * C_prev;
  CMatrix S = HC * H.adjoint();
  S.diagonal().array() += sigma2;
  // Gamma^H = S^-1 H C^H and C is Hermitian.
  return hpd_solve(hermitize(S), HC).adjoint();
}

CVector refine(const CVector& s_tilde_prev, const CMatrix& gamma, const CMatrix& H,
               const CVector& y) {
  if (y.size() != H.rows() || s_tilde_prev.size() != H.cols())
    throw std::invalid_argument("refine: dimension mismatch");
  return s_tilde_prev + gamma * (y - H * s_tilde_prev);
}

CMatrix update_pre_compression_corr(const CMatrix& P_prev, const CMatrix& Q_prev,
                                    const CMatrix& C_prev, const CMatrix& gamma,
                                    const CMatrix& H, const CMatrix& cross_prev) {
  const CMatrix GH = gamma * H;
  const CMatrix XHG = cross_prev * GH.adjoint();
  CMatrix P = P_prev + Q_prev + GH * C_prev + XHG + XHG.adjoint();
  return psd_repair(P);
}

CMatrix update_pre_compression_corr(const CMatrix& P_prev, const CMatrix& Q_prev,
                                    const CMatrix& C_prev, const CMatrix& gamma,
                                    const CMatrix& H) {
  return update_pre_compression_corr(P_prev, Q_prev, C_prev, gamma, H, -Q_prev);
}

CMatrix update_cross_cov(const CMatrix& cross_prev, const CMatrix& gamma, const CMatrix& H,
                         const CMatrix& Q) {
  const Eigen::Index K = gamma.rows();
  return cross_prev * (CMatrix::Identity(K, K) - gamma * H).adjoint() - Q;
}

CMatrix update_error_cov(const CMatrix& C_prev, const CMatrix& gamma, const CMatrix& H,
                         const CMatrix& Q) {
  const Eigen::Index K = C_prev.rows();
  CMatrix C = (CMatrix::Identity(K, K) - gamma * H) * C_prev + Q;
  return psd_repair(C);
}

void propagate_combiners(ChainState& state, const CMatrix& gamma, const CMatrix& H) {
  const Eigen::Index K = gamma.rows();
  const CMatrix T = CMatrix::Identity(K, K) - gamma * H;
  for (CMatrix& v : state.V) v = T * v;
  for (CMatrix& a : state.A) a = T * a;
  state.V.push_back(gamma);
  state.A.push_back(CMatrix::Identity(K, K));
}

namespace {

void reset_after_silent_link(ChainState& state, double p) {
  const Eigen::Index K = state.C.rows();
  for (CMatrix& v : state.V) v.setZero();
  for (CMatrix& a : state.A) a.setZero();
  state.C = p * CMatrix::Identity(K, K);
  state.P = CMatrix::Zero(K, K);
  state.Q = CMatrix::Zero(K, K);
  state.cross = CMatrix::Zero(K, K);
  state.s_tilde = CVector::Zero(K);
}

}  // namespace

ChainState run_chain(const NetworkConfig& cfg, const ChainInputs& inputs,
                     CompressionScheme scheme, const std::vector<double>& rates,
                     RandomStream* rng, CorrelationModel model) {
  const std::size_t length = inputs.H.size();
  if (length == 0) throw std::invalid_argument("run_chain: empty chain");
  if (rates.size() != length) throw std::invalid_argument("run_chain: one rate per AP required");
  const bool realize = inputs.y.has_value();
  if (realize && (inputs.y->size() != length || rng == nullptr))
    throw std::invalid_argument("run_chain: observations need one y per AP and a random stream");

  const int K = static_cast<int>(inputs.H.front().cols());
  ChainState state = initial_state(K, cfg.p);

  for (std::size_t idx = 0; idx < length; ++idx) {
    const CMatrix& H = inputs.H[idx];
    const double rate = rates[idx];
    const CMatrix C_prev = state.C;

    const CMatrix gamma = gain(C_prev, H, cfg.sigma2);
    if (realize) state.s_hat = refine(state.s_tilde, gamma, H, (*inputs.y)[idx]);
    const CMatrix cross_prev = model == CorrelationModel::kTracked ? state.cross : -state.Q;
    state.P = update_pre_compression_corr(state.P, state.Q, C_prev, gamma, H, cross_prev);
    propagate_combiners(state, gamma, H);
    state.gains.push_back(gamma);
    state.l = static_cast<int>(idx) + 1;

    if (rate == 0.0) {
      state.P_hist.push_back(state.P);
      reset_after_silent_link(state, cfg.p);
      state.Qhist.push_back(CMatrix::Zero(K, K));
      state.C_hist.push_back(state.C);
      state.outcomes.emplace_back();
      if (realize) state.q_realized.push_back(CVector::Zero(K));
      continue;
    }
    if (rate < 0.0 || std::isnan(rate)) throw std::invalid_argument("run_chain: negative rate");

    CompressionOutcome outcome;
    if (scheme == CompressionScheme::kInfinite || std::isinf(rate)) {
      outcome = compress(CompressionScheme::kInfinite, state.P, rate, nullptr);
    } else if (scheme == CompressionScheme::kWsinm) {
      const InterferenceContext ctx =
          interference_context(std::span(inputs.H).first(idx + 1), state.V, state.A,
                               state.Qhist, cfg.p, cfg.sigma2);
      outcome = compress(scheme, state.P, rate, &ctx);
    } else {
      outcome = compress(scheme, state.P, rate, nullptr);
    }
    state.Q = psd_repair(outcome.Q);
    state.C = update_error_cov(C_prev, gamma, H, state.Q);
    state.cross = update_cross_cov(cross_prev, gamma, H, state.Q);

    if (realize) {
      CVector q = draw_cn(*rng, state.Q);
      state.s_tilde = state.s_hat + q;
      state.q_realized.push_back(std::move(q));
    }
    state.Qhist.push_back(state.Q);
    state.C_hist.push_back(state.C);
    state.P_hist.push_back(state.P);
    state.outcomes.push_back(std::move(outcome));
  }
  return state;
}

RVector chain_sinr(const ChainState& state, const std::vector<CMatrix>& H, double p,
                   double sigma2) {
  if (state.l == 0) throw std::invalid_argument("chain_sinr: chain has not run");
  const std::span<const CMatrix> q(state.Qhist);
  return sinr_chain(std::span(H).first(state.l), state.V, state.A, q.first(state.l - 1),
                    state.Qhist.back(), p, sigma2);
}

CVector reconstruct_estimate(const ChainState& state, const std::vector<CVector>& y) {
  if (y.size() < state.V.size() || state.q_realized.size() != state.A.size())
    throw std::invalid_argument("reconstruct_estimate: missing realizations");
  CVector s = CVector::Zero(state.K());
  for (std::size_t i = 0; i < state.V.size(); ++i)
    s += state.V[i] * y[i] + state.A[i] * state.q_realized[i];
  return s;
}

}  // namespace seqfh
