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

#include <numeric>
#include <string>

#include "quartic/error.hpp"

namespace quartic {

std::int64_t residue(std::int64_t x, std::int64_t m) {
  if (m < 1) throw InvalidParameter("modulus must be positive");
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t gcd(std::int64_t x, std::int64_t y) {
  if (x < 0 || y < 0) throw InvalidParameter("gcd of a negative integer");
  if (x == 0 && y == 0) throw InvalidParameter("gcd(0, 0) is undefined");
  return std::gcd(x, y);
}

std::int64_t gcd(std::int64_t x, std::int64_t y, std::int64_t z) {
  if (z < 0) throw InvalidParameter("gcd of a negative integer");
  return gcd(gcd(x, y), z);
}

bool cong_pm(std::int64_t x, std::int64_t y, std::int64_t m) {
  const std::int64_t rx = residue(x, m);
  return rx == residue(y, m) || rx == residue(-y, m);
}

LambdaResult lambda_min(std::int64_t n, std::int64_t k) {
  if (n < 3 || k < 1 || 2 * k > n) {
    throw InvalidParameter("lambda_min needs n >= 3 and 1 <= k <= n/2, got n=" +
                           std::to_string(n) + " k=" + std::to_string(k));
  }
  const std::int64_t target = gcd(n, k) % n;
  std::int64_t acc = 0;
  for (std::int64_t lambda = 1; lambda <= n; ++lambda) {
    acc = (acc + k) % n;
    if (acc == target) return {lambda};
  }
  throw InvariantViolation("lambda_min: no solution found");
}

}  // namespace quartic
