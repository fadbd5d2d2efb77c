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


#include "doctest.h"
#include "test_support.hpp"

#include "seqfh/metrics.hpp"

#include <cmath>

using namespace seqfh;
using namespace seqfh::testing;

namespace {

struct Chain {
  std::vector<CMatrix> H, V, A, Q;
};

Chain random_chain(int L, int N, int K, RandomStream& rng) {
  Chain c;
  for (int l = 0; l < L; ++l) {
    c.H.push_back(oracle::random_complex(N, K, rng));
    c.V.push_back(oracle::random_complex(K, N, rng));
    c.A.push_back(oracle::random_complex(K, K, rng));
    c.Q.push_back(oracle::random_psd(K, rng));
  }
  // A_ll = I for the AP the estimate terminates at.
  c.A.back() = CMatrix::Identity(K, K);
  return c;
}

RVector sinr_of(const Chain& c, double p, double sigma2) {
  return sinr_chain(c.H, c.V, c.A, std::span(c.Q).first(c.Q.size() - 1), c.Q.back(), p, sigma2);
}

}  // namespace

TEST_CASE("SE from SINR") {
  RVector sinr(1);
  sinr << 1.0;
  const SeReport r = se_from_sinr(sinr, 180, 200);
  CHECK(r.prelog == doctest::Approx(0.9));
  CHECK(r.se(0) == doctest::Approx(0.9));
  CHECK(r.sum_se == doctest::Approx(0.9));
  NetworkConfig cfg;
  CHECK(se_from_sinr(sinr, cfg.tau_u(), cfg.tau_c).prelog == doctest::Approx(0.9));
  sinr << -1.0;
  CHECK_THROWS(se_from_sinr(sinr, 180, 200));
}

TEST_CASE("single AP, single user, no compression") {
  RandomStream rng(1);
  const CMatrix h = oracle::random_complex(4, 1, rng);
  const double p = 0.5, sigma2 = 0.1;
  const CMatrix g = gain(p * CMatrix::Identity(1, 1), h, sigma2);
  const std::vector<CMatrix> H{h}, V{g}, A{CMatrix::Identity(1, 1)};
  const RVector s = sinr_chain(H, V, A, {}, CMatrix::Zero(1, 1), p, sigma2);
  CHECK(s(0) == doctest::Approx(p * h.squaredNorm() / sigma2).epsilon(1e-12));
}

TEST_CASE("the denominator splits into base plus the current Q diagonal") {
  RandomStream rng(2);
  const Chain c = random_chain(3, 2, 3, rng);
  const auto prior = std::span(c.Q).first(2);
  const InterferenceContext ctx = interference_context(c.H, c.V, c.A, prior, 0.7, 0.2);
  const RVector s = sinr_of(c, 0.7, 0.2);
  const CMatrix G = effective_channel(c.H, c.V);
  // Independent expansion of the denominator with full products.
  CMatrix D = CMatrix::Zero(3, 3);
  for (int i = 0; i < 3; ++i) D += 0.2 * c.V[i] * c.V[i].adjoint() + c.A[i] * c.Q[i] * c.A[i].adjoint();
  for (int k = 0; k < 3; ++k) {
    double interf = 0.0;
    for (int j = 0; j < 3; ++j)
      if (j != k) interf += 0.7 * std::norm(G(k, j));
    const double denom = interf + std::real(D(k, k));
    CHECK(ctx.base(k) + std::real(c.Q[2](k, k)) == doctest::Approx(denom).epsilon(1e-12));
    CHECK(s(k) == doctest::Approx(0.7 * std::norm(G(k, k)) / denom).epsilon(1e-12));
  }
}

TEST_CASE("row scaling of the combiners leaves SINR unchanged") {
  RandomStream rng(3);
  Chain c = random_chain(2, 3, 2, rng);
  const RVector before = sinr_of(c, 1.0, 0.3);
  CMatrix D = CMatrix::Identity(2, 2);
  D(0, 0) = cdouble(3.0, -2.0);
  D(1, 1) = 0.01;
  for (int i = 0; i < 2; ++i) {
    c.V[i] = D * c.V[i];
    c.A[i] = D * c.A[i];
  }
  // Keep A_ll = I by moving the scaling of the last term into its Q.
  c.Q[1] = D * c.Q[1] * D.adjoint();
  c.A[1] = CMatrix::Identity(2, 2);
  CHECK((sinr_of(c, 1.0, 0.3) - before).norm() <= 1e-10 * before.norm());
}

TEST_CASE("more compression noise never raises SINR") {
  RandomStream rng(4);
  Chain c = random_chain(2, 2, 3, rng);
  const RVector before = sinr_of(c, 1.0, 0.3);
  c.Q[1] += oracle::random_psd(3, rng);
  const RVector after = sinr_of(c, 1.0, 0.3);
  for (int k = 0; k < 3; ++k) CHECK(after(k) <= before(k));
}

TEST_CASE("a user with a zero channel has zero SINR") {
  RandomStream rng(5);
  Chain c = random_chain(2, 2, 3, rng);
  for (CMatrix& h : c.H) h.col(1).setZero();
  CHECK(sinr_of(c, 1.0, 0.3)(1) == 0.0);
}

TEST_CASE("history lengths are checked") {
  RandomStream rng(6);
  const Chain c = random_chain(2, 2, 2, rng);
  CHECK_THROWS(sinr_chain(c.H, c.V, c.A, c.Q, c.Q[0], 1.0, 0.1));
  CHECK_THROWS(sinr_chain(std::span(c.H).first(1), c.V, c.A, {}, c.Q[0], 1.0, 0.1));
}
