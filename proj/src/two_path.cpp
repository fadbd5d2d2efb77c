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


#include "seqfh/two_path.hpp"

#include "seqfh/metrics.hpp"

#include <span>
#include <stdexcept>

namespace seqfh {

namespace {

constexpr double kMaxCondition = 1e12;
constexpr double kRidge = 1e-12;

// Works on the diagonally equilibrated matrix D^-1/2 S D^-1/2 so that paths
// with very different noise levels are not mistaken for near-singularity.
// When that matrix is worse conditioned than kMaxCondition, adds
// kRidge * trace / n to it, i.e. kRidge * S_ii to each diagonal entry of S.
CMatrix regularize(const CMatrix& s) {
  CMatrix h = hermitize(s);
  RVector d = h.diagonal().real();
  if (!(d.maxCoeff() > 0.0)) throw NumericalError("fusion: covariance is not positive");
  for (Eigen::Index i = 0; i < d.size(); ++i)
    if (!(d(i) > 0.0)) d(i) = 1.0;
  const RVector scale = d.cwiseSqrt().cwiseInverse();
  const CMatrix e = scale.asDiagonal() * h * scale.asDiagonal();
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(e, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  if (lo > 0.0 && hi / lo <= kMaxCondition) return h;
  const double ridge = kRidge * std::real(e.trace()) / static_cast<double>(e.rows());
  h.diagonal().array() += ridge * d.array();
  return h;
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> split_paths(int L) {
  if (L < 2) throw std::invalid_argument("two-path mode needs at least two APs");
  const int first_size = (L + 1) / 2;
  std::vector<int> first;
  std::vector<int> second;
  for (int l = first_size - 1; l >= 0; --l) first.push_back(l);
  for (int l = first_size; l < L; ++l) second.push_back(l);
  return {first, second};
}

PathSummary summarize_path(const ChainState& chain, const std::vector<CMatrix>& H,
                           double sigma2) {
  if (static_cast<int>(H.size()) < chain.l || chain.l == 0)
    throw std::invalid_argument("summarize_path: chain and channels disagree");
  const Eigen::Index K = chain.K();
  PathSummary out;
  out.s_tilde = chain.s_tilde;
  out.G = effective_channel(std::span(H).first(chain.l), chain.V);
  out.Z = CMatrix::Zero(K, K);
  for (std::size_t i = 0; i < chain.V.size(); ++i) {
    out.Z.noalias() += sigma2 * chain.V[i] * chain.V[i].adjoint();
    out.Z.noalias() += chain.A[i] * chain.Qhist[i] * chain.A[i].adjoint();
  }
  out.Z = hermitize(out.Z);
  return out;
}

FusedEstimate fuse(const PathSummary& first, const PathSummary& second, double p) {
  const Eigen::Index K = first.G.cols();
  if (second.G.cols() != K || first.G.rows() != K || second.G.rows() != K)
    throw std::invalid_argument("fuse: path summaries disagree on K");
  FusedEstimate f;
  f.G_tp.resize(2 * K, K);
  f.G_tp << first.G, second.G;
  f.Z_tp = CMatrix::Zero(2 * K, 2 * K);
  f.Z_tp.topLeftCorner(K, K) = first.Z;
  f.Z_tp.bottomRightCorner(K, K) = second.Z;

  const CMatrix S = regularize(p * f.G_tp * f.G_tp.adjoint() + f.Z_tp);
  // V = p G^H S^-1, so V^H = S^-1 (p G).
  f.V_tp = hpd_solve(S, p * f.G_tp).adjoint();

  if (first.s_tilde.size() == K && second.s_tilde.size() == K) {
    f.y_tp.resize(2 * K);
    f.y_tp << first.s_tilde, second.s_tilde;
    f.s_hat_tp = f.V_tp * f.y_tp;
  }
  return f;
}

RVector sinr_fused(const FusedEstimate& fused, double p) {
  const CMatrix& G = fused.G_tp;
  const Eigen::Index K = G.cols();
  const CMatrix total = p * G * G.adjoint() + fused.Z_tp;
  RVector sinr(K);
  for (Eigen::Index k = 0; k < K; ++k) {
    if (G.col(k).squaredNorm() == 0.0) {
      sinr(k) = 0.0;
      continue;
    }
    const CMatrix others = regularize(total - p * G.col(k) * G.col(k).adjoint());
    const CVector x = hpd_solve(others, G.col(k));
    sinr(k) = p * std::real(G.col(k).dot(x));
  }
  return sinr;
}

CMatrix lmmse_error_cov(const CMatrix& G, const CMatrix& Z, double p) {
  const Eigen::Index K = G.cols();
  const CMatrix S = regularize(p * G * G.adjoint() + Z);
  const CMatrix X = hpd_solve(S, G);
  return hermitize(p * CMatrix::Identity(K, K) - p * p * G.adjoint() * X);
}

}  // namespace seqfh
