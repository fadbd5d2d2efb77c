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

#include "seqfh/config.hpp"
#include "seqfh/oracles.hpp"
#include "seqfh/sequential.hpp"

#include <cmath>
#include <vector>

namespace seqfh::testing {

// Unit-power network with i.i.d. CN(0, 1) channels, convenient for
// algebraic checks.
inline NetworkConfig small_config(int L, int N, int K, double sigma2 = 0.2) {
  NetworkConfig cfg;
  cfg.L = L;
  cfg.N = N;
  cfg.K = K;
  cfg.p = 1.0;
  cfg.sigma2 = sigma2;
  return cfg;
}

inline std::vector<CMatrix> random_channels(const NetworkConfig& cfg, RandomStream& rng) {
  std::vector<CMatrix> H;
  for (int l = 0; l < cfg.L; ++l) H.push_back(oracle::random_complex(cfg.N, cfg.K, rng));
  return H;
}

inline CMatrix stack(const std::vector<CMatrix>& H) {
  CMatrix out(static_cast<Eigen::Index>(H.size()) * H.front().rows(), H.front().cols());
  for (std::size_t l = 0; l < H.size(); ++l)
    out.middleRows(static_cast<Eigen::Index>(l) * H.front().rows(), H.front().rows()) = H[l];
  return out;
}

struct Draw {
  CVector s;
  std::vector<CVector> n;
  std::vector<CVector> y;
};

inline Draw draw_observation(const NetworkConfig& cfg, const std::vector<CMatrix>& H,
                             RandomStream& rng) {
  Draw d;
  d.s = std::sqrt(cfg.p) * draw_cn(rng, cfg.K);
  for (const CMatrix& h : H) {
    d.n.push_back(std::sqrt(cfg.sigma2) * draw_cn(rng, h.rows()));
    d.y.push_back(h * d.s + d.n.back());
  }
  return d;
}

inline double rel_diff(const CMatrix& a, const CMatrix& b) {
  return (a - b).norm() / std::max(b.norm(), 1e-300);
}

}  // namespace seqfh::testing
