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


#include "seqfh/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace seqfh {

namespace {

void check_histories(std::span<const CMatrix> channels, std::span<const CMatrix> V,
                     std::span<const CMatrix> A, std::span<const CMatrix> prior_Q) {
  if (channels.empty()) throw std::invalid_argument("empty chain");
  if (V.size() != channels.size() || A.size() != channels.size() ||
      prior_Q.size() + 1 != channels.size())
    throw std::invalid_argument("combiner histories inconsistent with chain length");
}

}  // namespace

CMatrix effective_channel(std::span<const CMatrix> channels, std::span<const CMatrix> V) {
  CMatrix G = CMatrix::Zero(V.front().rows(), channels.front().cols());
  for (std::size_t i = 0; i < channels.size(); ++i) G.noalias() += V[i] * channels[i];
  return G;
}

InterferenceContext interference_context(std::span<const CMatrix> channels,
                                         std::span<const CMatrix> V,
                                         std::span<const CMatrix> A,
                                         std::span<const CMatrix> prior_Q, double p,
                                         double sigma2) {
  check_histories(channels, V, A, prior_Q);
  const CMatrix G = effective_channel(channels, V);
  const Eigen::Index K = G.rows();

  RVector base = RVector::Zero(K);
  for (Eigen::Index k = 0; k < K; ++k) {
    const double all_users = G.row(k).squaredNorm();
    base(k) = p * (all_users - std::norm(G(k, k)));
  }
  for (const CMatrix& v : V) base += sigma2 * v.rowwise().squaredNorm();
  for (std::size_t i = 0; i < prior_Q.size(); ++i) {
    const CMatrix aq = A[i] * prior_Q[i];
    // diag(A Q A^H) without forming the product
    base += aq.cwiseProduct(A[i].conjugate()).rowwise().sum().real();
  }
  return {base};
}

RVector sinr_chain(std::span<const CMatrix> channels, std::span<const CMatrix> V,
                   std::span<const CMatrix> A, std::span<const CMatrix> prior_Q,
                   const CMatrix& current_Q, double p, double sigma2) {
  const InterferenceContext ctx = interference_context(channels, V, A, prior_Q, p, sigma2);
  const CMatrix G = effective_channel(channels, V);
  const Eigen::Index K = G.rows();
  RVector sinr(K);
  for (Eigen::Index k = 0; k < K; ++k) {
    const double signal = p * std::norm(G(k, k));
    const double denom = ctx.base(k) + std::real(current_Q(k, k));
    sinr(k) = signal == 0.0 ? 0.0 : signal / denom;
  }
  return sinr;
}

SeReport se_from_sinr(const RVector& sinr, int tau_u, int tau_c) {
  if (tau_c <= 0 || tau_u < 0 || tau_u > tau_c) throw std::invalid_argument("bad prelog");
  if (sinr.size() > 0 && sinr.minCoeff() < 0.0) throw std::invalid_argument("negative SINR");
  SeReport report;
  report.prelog = static_cast<double>(tau_u) / tau_c;
  report.sinr = sinr;
  report.se = sinr.unaryExpr([&](double s) { return report.prelog * std::log2(1.0 + s); });
  report.sum_se = report.se.sum();
  return report;
}

}  // namespace seqfh
