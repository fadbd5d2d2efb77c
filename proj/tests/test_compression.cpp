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

#include "seqfh/compression.hpp"

#include <cmath>
#include <numbers>

using namespace seqfh;
using namespace seqfh::testing;

namespace {

CMatrix diag2(double a, double b) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

double tr(const CMatrix& m) { return std::real(m.trace()); }

}  // namespace

TEST_CASE("EIU reference values") {
  CMatrix P(1, 1);
  P << 1.0;
  CHECK(std::real(eiu(P, 1.0).Q(0, 0)) == doctest::Approx(1.0));
  P << 3.0;
  CHECK(std::real(eiu(P, 2.0).Q(0, 0)) == doctest::Approx(1.0));
  CHECK_THROWS(eiu(P, 0.0));
}

TEST_CASE("EIU spends R / K bits per user") {
  RandomStream rng(1);
  const CMatrix P = oracle::random_psd(4, rng);
  const CompressionOutcome out = eiu(P, 12.0);
  double bits = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double q = std::real(out.Q(k, k));
    CHECK(std::log2(1.0 + std::real(P(k, k)) / q) == doctest::Approx(3.0));
    bits += std::log2(1.0 + std::real(P(k, k)) / q);
  }
  CHECK(bits == doctest::Approx(12.0));
  CHECK((out.Q - CMatrix(out.Q.diagonal().asDiagonal())).norm() == 0.0);
}

TEST_CASE("SCNM with one user equals EIU") {
  CMatrix P(1, 1);
  P << 2.7;
  for (double r : {0.3, 1.0, 4.0, 17.0})
    CHECK(std::real(scnm(P, r).Q(0, 0)) ==
          doctest::Approx(std::real(eiu(P, r).Q(0, 0))).epsilon(1e-9));
}

TEST_CASE("SCNM of a scaled identity is a scaled identity") {
  const CMatrix P = 2.0 * CMatrix::Identity(3, 3);
  const CompressionOutcome out = scnm(P, 6.0);
  const double q = 2.0 / (std::exp2(2.0) - 1.0);
  CHECK(rel_diff(out.Q, q * CMatrix::Identity(3, 3)) < 1e-8);
}

TEST_CASE("EIU and SCNM agree on a scaled identity") {
  const CMatrix P = 0.4 * CMatrix::Identity(4, 4);
  const CMatrix a = eiu(P, 7.0).Q;
  const CMatrix b = scnm(P, 7.0).Q;
  CHECK(rel_diff(b, a) < 1e-8);
  CHECK(tr(a) == doctest::Approx(tr(b)).epsilon(1e-8));
}

TEST_CASE("SCNM meets the rate and matches the grid oracle") {
  RandomStream rng(2);
  std::uniform_real_distribution<double> u(0.5, 8.0);
  for (int t = 0; t < 30; ++t) {
    const CMatrix P = oracle::random_psd(2, rng, 3.0);
    const double rate = u(rng);
    const CompressionOutcome out = scnm(P, rate);
    CHECK(logdet_rate(P, out.Q) == doctest::Approx(rate).epsilon(1e-6));
    CHECK(std::abs(out.achieved_rate - rate) <= 1e-6 * rate);
    const double ref = oracle::scnm_grid_min(P, rate, RVector::Ones(2));
    CHECK(std::abs(tr(out.Q) - ref) <= 1e-3 * ref);
  }
}

TEST_CASE("SCNM beats random feasible noise covariances") {
  RandomStream rng(3);
  for (int K = 1; K <= 3; ++K) {
    const CMatrix P = oracle::random_psd(K, rng);
    const double rate = 2.0 * K;
    const double best = tr(scnm(P, rate).Q);
    for (int t = 0; t < 1000; ++t) {
      const CMatrix Qf = oracle::random_feasible_noise(P, rate, rng);
      REQUIRE(logdet_rate(P, Qf) == doctest::Approx(rate).epsilon(1e-8));
      CHECK(best <= tr(Qf) * (1.0 + 1e-3));
    }
  }
}

TEST_CASE("SCNM handles rank-deficient correlation") {
  RandomStream rng(4);
  const CVector v = draw_cn(rng, 3);
  const CMatrix P = v * v.adjoint();
  const CompressionOutcome out = scnm(P, 4.0);
  CHECK(is_hermitian_psd(out.Q, 1e-9));
  CHECK(std::isfinite(tr(out.Q)));
  const double q = v.squaredNorm() / (std::exp2(4.0) - 1.0);
  CHECK(tr(out.Q) == doctest::Approx(q).epsilon(1e-6));
}

TEST_CASE("weighted SCNM") {
  RandomStream rng(5);
  const CMatrix P = oracle::random_psd(3, rng);
  CHECK(rel_diff(weighted_scnm(P, 5.0, RVector::Ones(3)).Q, scnm(P, 5.0).Q) < 1e-9);

  RVector w(2);
  w << 1.0, 4.0;
  for (int t = 0; t < 10; ++t) {
    const CMatrix P2 = oracle::random_psd(2, rng);
    const CompressionOutcome out = weighted_scnm(P2, 3.0, w);
    CHECK(logdet_rate(P2, out.Q) == doctest::Approx(3.0).epsilon(1e-6));
    const double got = std::real((w.cast<cdouble>().asDiagonal() * out.Q).trace());
    const double ref = oracle::scnm_grid_min(P2, 3.0, w);
    CHECK(std::abs(got - ref) <= 1e-3 * ref);
  }
  CHECK_THROWS(weighted_scnm(P, 5.0, RVector::Zero(3)));
}

TEST_CASE("WSINM on a symmetric problem") {
  const CMatrix P = diag2(1.0, 1.0);
  InterferenceContext ctx{RVector::Constant(2, 0.5)};
  const CompressionOutcome out = wsinm(P, 4.0, ctx);
  CHECK(rel_diff(out.Q, scnm(P, 4.0).Q) < 1e-7);
  CHECK(std::abs(out.weights(0) - out.weights(1)) < 1e-9);
}

TEST_CASE("WSINM objective, bound and weight fixed point") {
  RandomStream rng(6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    const int K = 2 + t % 4;
    const CMatrix P = oracle::random_psd(K, rng);
    RVector base(K);
    for (int k = 0; k < K; ++k) base(k) = 1e-3 + u(rng);
    const double rate = 1.0 + 8.0 * u(rng);
    const CompressionOutcome out = wsinm(P, rate, InterferenceContext{base});
    REQUIRE(!out.objective_trace.empty());
    for (std::size_t i = 1; i < out.objective_trace.size(); ++i)
      CHECK(out.objective_trace[i] <=
            out.objective_trace[i - 1] + 1e-12 * std::abs(out.objective_trace[i - 1]));
    double lower = 0.0;
    for (int k = 0; k < K; ++k) {
      const double x = base(k) + std::real(out.Q(k, k));
      lower += wsinm_term_min(x);
      CHECK(out.weights(k) == doctest::Approx(1.0 / (std::numbers::ln2 * x)).epsilon(1e-6));
    }
    CHECK(out.objective_trace.back() >= lower - 1e-9 * std::abs(lower));
    CHECK(logdet_rate(P, out.Q) == doctest::Approx(rate).epsilon(1e-6));
  }
}

TEST_CASE("WSINM per-user term closed form") {
  for (double x : {1e-3, 0.2, 1.0, 7.5}) {
    const double w_star = 1.0 / (std::numbers::ln2 * x);
    CHECK(wsinm_term(w_star, x) == doctest::Approx(wsinm_term_min(x)).epsilon(1e-12));
    for (double f = 0.01; f < 100.0; f *= 1.3)
      CHECK(wsinm_term(w_star * f, x) >= wsinm_term_min(x) - 1e-12);
  }
  // A user with no signal, no interference and no compression noise has X = 0.
  CHECK_THROWS(wsinm(diag2(1, 0), 2.0, InterferenceContext{RVector::Zero(2)}));
}

TEST_CASE("more bits never increase the SCNM noise") {
  RandomStream rng(7);
  for (int t = 0; t < 20; ++t) {
    const CMatrix P = oracle::random_psd(3, rng);
    double last = INFINITY;
    for (double r = 0.5; r <= 20.0; r += 0.5) {
      const CMatrix Q = scnm(P, r).Q;
      CHECK(tr(Q) <= last * (1.0 + 1e-9));
      last = tr(Q);
    }
  }
}

TEST_CASE("dispatch and names") {
  RandomStream rng(8);
  const CMatrix P = oracle::random_psd(2, rng);
  const CompressionOutcome inf = compress(CompressionScheme::kInfinite, P, 5.0, nullptr);
  CHECK(inf.Q.norm() == 0.0);
  CHECK(std::isinf(inf.achieved_rate));
  CHECK_THROWS(compress(CompressionScheme::kWsinm, P, 5.0, nullptr));
  for (CompressionScheme s : {CompressionScheme::kEiu, CompressionScheme::kScnm,
                              CompressionScheme::kWsinm, CompressionScheme::kInfinite})
    CHECK(parse_compression(to_string(s)) == s);
  CHECK(parse_compression("inf") == CompressionScheme::kInfinite);
  CHECK_THROWS(parse_compression("zip"));
}
