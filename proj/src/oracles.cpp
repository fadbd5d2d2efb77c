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


#include "seqfh/oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace seqfh::oracle {

CMatrix centralized_combiner(const CMatrix& H, double p, double sigma2) {
  const Eigen::Index M = H.rows();
  const CMatrix S = p * H * H.adjoint() + sigma2 * CMatrix::Identity(M, M);
  return p * H.adjoint() * Eigen::FullPivLU<CMatrix>(S).inverse();
}

CMatrix centralized_error_cov(const CMatrix& H, double p, double sigma2) {
  const Eigen::Index K = H.cols();
  const CMatrix info = CMatrix::Identity(K, K) / p + H.adjoint() * H / sigma2;
  return Eigen::FullPivLU<CMatrix>(info).inverse();
}

RVector lmmse_sinr(const CMatrix& G, const CMatrix& Z, double p) {
  const Eigen::Index K = G.cols();
  RVector sinr(K);
  for (Eigen::Index k = 0; k < K; ++k) {
    CMatrix others = Z;
    for (Eigen::Index j = 0; j < K; ++j)
      if (j != k) others += p * G.col(j) * G.col(j).adjoint();
    const CVector x = Eigen::FullPivLU<CMatrix>(others).solve(G.col(k));
    sinr(k) = p * std::real(G.col(k).dot(x));
  }
  return sinr;
}

RVector centralized_sinr(const CMatrix& H, double p, double sigma2) {
  return lmmse_sinr(H, sigma2 * CMatrix::Identity(H.rows(), H.rows()), p);
}

double scnm_grid_min(const CMatrix& P, double rate, const RVector& weights) {
  if (P.rows() != 2) throw std::invalid_argument("grid oracle is for K = 2");
  const RVector root = weights.cwiseSqrt();
  const CMatrix p_bar = root.asDiagonal() * P * root.asDiagonal();
  Eigen::SelfAdjointEigenSolver<CMatrix> eig((p_bar + p_bar.adjoint()) * 0.5);
  const double l1 = eig.eigenvalues()(0);
  const double l2 = eig.eigenvalues()(1);
  auto cost = [&](double r) {
    return l1 / (std::exp2(r) - 1.0) + l2 / (std::exp2(rate - r) - 1.0);
  };
  const int n = 20000;
  int best = 1;
  double best_cost = cost(rate / n);
  for (int i = 2; i < n; ++i) {
    const double c = cost(rate * i / n);
    if (c < best_cost) {
      best_cost = c;
      best = i;
    }
  }
  double a = rate * (best - 1) / n;
  double b = rate * (best + 1) / n;
  if (a <= 0.0) a = rate * 1e-9;
  if (b >= rate) b = rate * (1.0 - 1e-9);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 200; ++it) {
    const double c = b - g * (b - a);
    const double d = a + g * (b - a);
    if (cost(c) < cost(d))
      b = d;
    else
      a = c;
  }
  return std::min(best_cost, cost(0.5 * (a + b)));
}

CMatrix random_complex(Eigen::Index rows, Eigen::Index cols, RandomStream& rng) {
  CMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) m.col(j) = draw_cn(rng, rows);
  return m;
}

CMatrix random_psd(Eigen::Index n, RandomStream& rng, double decades) {
  const CMatrix basis = random_complex(n, n, rng).householderQr().householderQ();
  std::uniform_real_distribution<double> u(0.0, decades);
  RVector lambda(n);
  for (Eigen::Index i = 0; i < n; ++i) lambda(i) = std::pow(10.0, -u(rng));
  const CMatrix m = basis * lambda.asDiagonal() * basis.adjoint();
  return (m + m.adjoint()) * 0.5;
}

CMatrix random_feasible_noise(const CMatrix& P, double rate, RandomStream& rng) {
  const CMatrix B = random_psd(P.rows(), rng, 3.0);
  // Generalized eigenvalues of (P, B): rate(t) = sum log2(1 + mu_i / t).
  Eigen::GeneralizedSelfAdjointEigenSolver<CMatrix> gen((P + P.adjoint()) * 0.5, B,
                                                        Eigen::EigenvaluesOnly);
  const RVector mu = gen.eigenvalues().cwiseMax(0.0);
  auto rate_at = [&](double log_t) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < mu.size(); ++i) s += std::log2(1.0 + mu(i) / std::exp(log_t));
    return s;
  };
  double lo = -50.0;
  double hi = 50.0;
  while (rate_at(lo) < rate) lo -= 50.0;
  while (rate_at(hi) > rate) hi += 50.0;
  for (int it = 0; it < 300; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (rate_at(mid) > rate)
      lo = mid;
    else
      hi = mid;
  }
  return std::exp(0.5 * (lo + hi)) * B;
}

}  // namespace seqfh::oracle
