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
#include "seqfh/linalg.hpp"

#include <vector>

namespace seqfh {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(const Point& a, const Point& b);

// APs equally spaced on a ring; users uniform over the inner disk.
struct Layout {
  std::vector<Point> ap_positions;
  std::vector<Point> user_positions;
};

// Per-(k, l) spatial covariance. Only the scaled-identity model beta * I_N
// is implemented; the enum leaves room for correlated models.
enum class SpatialModel { kScaledIdentity };

struct ChannelRealization {
  std::vector<CMatrix> H;  // L entries, each N x K
  RMatrix beta;            // L x K linear large-scale gains
  SpatialModel R_struct = SpatialModel::kScaledIdentity;

  int L() const { return static_cast<int>(H.size()); }
  int N() const { return H.empty() ? 0 : static_cast<int>(H.front().rows()); }
  int K() const { return H.empty() ? 0 : static_cast<int>(H.front().cols()); }
};

inline constexpr double kMinDistance = 1.0;  // meters

Layout place_network(const NetworkConfig& cfg, RandomStream& rng);

// 3GPP urban microcell: -30.5 - 36.7 log10(d), d clamped at kMinDistance.
double pathloss_db(double d);

RMatrix large_scale_gains(const Layout& layout);

ChannelRealization draw_channels(const NetworkConfig& cfg, const Layout& layout,
                                 RandomStream& rng);

// Draws H_l[:, k] ~ CN(0, beta(l, k) I_N) for a given gain matrix.
ChannelRealization draw_channels(const RMatrix& beta, int N, RandomStream& rng);

// Stacks the selected APs' channels into an (|aps| N) x K matrix.
CMatrix stack_channels(const ChannelRealization& ch, const std::vector<int>& aps);
CMatrix stack_channels(const ChannelRealization& ch);

}  // namespace seqfh
