// Copyright 2026 The Quartic Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quartic/modarith.hpp"

#include <doctest.h>

#include "quartic/error.hpp"

namespace quartic {
namespace {

TEST_CASE("gcd") {
  CHECK(gcd(10, 5) == 5);
  CHECK(gcd(12, 8) == 4);
  CHECK(gcd(7, 0) == 7);
  CHECK(gcd(0, 7) == 7);
  CHECK(gcd(12, 2, 4) == 2);
  CHECK(gcd(12, 2, 3) == 1);
  CHECK_THROWS_AS(gcd(0, 0), InvalidParameter);
  CHECK_THROWS_AS(gcd(-4, 2), InvalidParameter);
}

TEST_CASE("residue is canonical") {
  CHECK(residue(-1, 5) == 4);
  CHECK(residue(-10, 5) == 0);
  CHECK(residue(12, 5) == 2);
  CHECK_THROWS_AS(residue(3, 0), InvalidParameter);
}

TEST_CASE("lambda_min examples") {
  CHECK(lambda_min(3, 1).lambda == 1);
  CHECK(lambda_min(10, 4).lambda == 3);   // 12 == 2 (mod 10)
  CHECK(lambda_min(12, 5).lambda == 5);   // 25 == 1 (mod 12)
  CHECK(lambda_min(10, 5).lambda == 1);
  CHECK_THROWS_AS(lambda_min(2, 1), InvalidParameter);
  CHECK_THROWS_AS(lambda_min(10, 6), InvalidParameter);
  CHECK_THROWS_AS(lambda_min(10, 0), InvalidParameter);
}

TEST_CASE("lambda_min is the least solution for all n <= 200") {
  for (std::int64_t n = 3; n <= 200; ++n) {
    for (std::int64_t k = 1; 2 * k <= n; ++k) {
      const std::int64_t q = gcd(n, k);
      const std::int64_t lambda = lambda_min(n, k).lambda;
      CAPTURE(n);
      CAPTURE(k);
      REQUIRE(lambda >= 1);
      REQUIRE(lambda <= n / q);
      REQUIRE((lambda * k) % n == q % n);
      for (std::int64_t smaller = 1; smaller < lambda; ++smaller) {
        REQUIRE((smaller * k) % n != q % n);
      }
    }
  }
}

TEST_CASE("cong_pm") {
  CHECK(cong_pm(12, 2, 14));
  CHECK_FALSE(cong_pm(4, 2, 10));
  CHECK(cong_pm(0, 0, 7));
  CHECK(cong_pm(8, 2, 10));
  CHECK(cong_pm(5, 3, 1));
}

TEST_CASE("cong_pm symmetries") {
  for (std::int64_t m = 1; m <= 24; ++m) {
    for (std::int64_t x = -30; x <= 30; ++x) {
      for (std::int64_t y = -10; y <= 10; ++y) {
        const bool base = cong_pm(x, y, m);
        CHECK(cong_pm(x, -y, m) == base);
        CHECK(cong_pm(x + 3 * m, y, m) == base);
        CHECK(cong_pm(x - m, y, m) == base);
      }
    }
  }
}

}  // namespace
}  // namespace quartic
