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
#include "seqfh/allocation.hpp"

#include <cmath>

using namespace seqfh;

TEST_CASE("equal allocation") {
  const RateSchedule s = equal_allocation(1000.0, 4);
  REQUIRE(s.rates.size() == 4);
  for (double r : s.rates) CHECK(r == doctest::Approx(250.0));
  CHECK(equal_allocation(500.0, 1).rates.at(0) == doctest::Approx(500.0));
}

TEST_CASE("linear allocation") {
  const RateSchedule s = linear_allocation(1000.0, 4);
  REQUIRE(s.rates.size() == 4);
  CHECK(s.rates[0] == doctest::Approx(100.0));
  CHECK(s.rates[1] == doctest::Approx(200.0));
  CHECK(s.rates[2] == doctest::Approx(300.0));
  CHECK(s.rates[3] == doctest::Approx(400.0));
  CHECK(linear_allocation(500.0, 1).rates.at(0) == doctest::Approx(500.0));
}

TEST_CASE("log allocation") {
  const RateSchedule s = log_allocation(1000.0, 4);
  REQUIRE(s.rates.size() == 4);
  CHECK(s.rates[0] == 0.0);
  CHECK(s.rates[1] / s.rates[3] == doctest::Approx(0.5));
  CHECK(s.rates[2] / s.rates[1] == doctest::Approx(std::log2(3.0)));
  CHECK_THROWS(log_allocation(1000.0, 1));
  const RateSchedule two = log_allocation(10.0, 2);
  CHECK(two.rates[0] == 0.0);
  CHECK(two.rates[1] == doctest::Approx(10.0));
}

TEST_CASE("every schedule spends the budget") {
  for (int L = 2; L <= 16; ++L)
    for (AllocationScheme a : {AllocationScheme::kEqual, AllocationScheme::kLinear,
                               AllocationScheme::kLog}) {
      const RateSchedule s = allocate(a, 737.5, L);
      CHECK(s.total() == doctest::Approx(737.5).epsilon(1e-12));
      for (double r : s.rates) CHECK(r >= 0.0);
      for (int l = 1; l < L; ++l) {
        if (a == AllocationScheme::kEqual) CHECK(s.rates[l] == s.rates[0]);
        if (a == AllocationScheme::kLinear) CHECK(s.rates[l] > s.rates[l - 1]);
        if (a == AllocationScheme::kLog) CHECK(s.rates[l] >= s.rates[l - 1]);
      }
    }
}

TEST_CASE("names round-trip and bad input is rejected") {
  for (AllocationScheme a : {AllocationScheme::kEqual, AllocationScheme::kLinear,
                             AllocationScheme::kLog})
    CHECK(parse_allocation(to_string(a)) == a);
  CHECK_THROWS(parse_allocation("quadratic"));
  CHECK_THROWS(equal_allocation(-1.0, 4));
  CHECK_THROWS(equal_allocation(100.0, 0));
  CHECK(path_budget(500.0, 6, 12) == doctest::Approx(250.0));
  CHECK(path_budget(300.0, 2, 3) == doctest::Approx(200.0));
}
