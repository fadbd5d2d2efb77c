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


#include "seqfh/geometry.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace seqfh {

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

Layout place_network(const NetworkConfig& cfg, RandomStream& rng) {
  Layout layout;
  layout.ap_positions.reserve(cfg.L);
  for (int l = 0; l < cfg.L; ++l) {
    const double angle = 2.0 * std::numbers::pi * l / cfg.L;
    layout.ap_positions.push_back(
        {cfg.ap_ring_radius * std::cos(angle), cfg.ap_ring_radius * std::sin(angle)});
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  layout.user_positions.reserve(cfg.K);
  for (int k = 0; k < cfg.K; ++k) {
    // sqrt of a uniform radius fraction gives uniform density over area
    const double r = cfg.user_disk_radius * std::sqrt(unit(rng));
    const double angle = 2.0 * std::numbers::pi * unit(rng);
    layout.user_positions.push_back({r * std::cos(angle), r * std::sin(angle)});
  }
  return layout;
}

double pathloss_db(double d) {
  if (std::isnan(d)) throw ConfigError("distance is NaN");
  const double clamped = std::max(d, kMinDistance);
  return -30.5 - 36.7 * std::log10(clamped);
}

RMatrix large_scale_gains(const Layout& layout) {
  const auto L = static_cast<Eigen::Index>(layout.ap_positions.size());
  const auto K = static_cast<Eigen::Index>(layout.user_positions.size());
  RMatrix beta(L, K);
  for (Eigen::Index l = 0; l < L; ++l)
    for (Eigen::Index k = 0; k < K; ++k)
      beta(l, k) = std::pow(
          10.0, pathloss_db(distance(layout.ap_positions[l], layout.user_positions[k])) / 10.0);
  return beta;
}

ChannelRealization draw_channels(const RMatrix& beta, int N, RandomStream& rng) {
  ChannelRealization ch;
  ch.beta = beta;
  ch.H.reserve(beta.rows());
  for (Eigen::Index l = 0; l < beta.rows(); ++l) {
    CMatrix h(N, beta.cols());
    for (Eigen::Index k = 0; k < beta.cols(); ++k)
      h.col(k) = std::sqrt(beta(l, k)) * draw_cn(rng, N);
    ch.H.push_back(std::move(h));
  }
  return ch;
}

ChannelRealization draw_channels(const NetworkConfig& cfg, const Layout& layout,
                                 RandomStream& rng) {
  return draw_channels(large_scale_gains(layout), cfg.N, rng);
}

CMatrix stack_channels(const ChannelRealization& ch, const std::vector<int>& aps) {
  const int N = ch.N();
  CMatrix stacked(static_cast<Eigen::Index>(aps.size()) * N, ch.K());
  for (std::size_t i = 0; i < aps.size(); ++i)
    stacked.middleRows(static_cast<Eigen::Index>(i) * N, N) = ch.H.at(aps[i]);
  return stacked;
}

CMatrix stack_channels(const ChannelRealization& ch) {
  std::vector<int> all(ch.L());
  std::iota(all.begin(), all.end(), 0);
  return stack_channels(ch, all);
}

}  // namespace seqfh
