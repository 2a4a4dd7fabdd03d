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

#pragma once

#include <cstdint>

namespace quartic {

// Canonical residue of x in [0, m). m >= 1.
std::int64_t residue(std::int64_t x, std::int64_t m);

// Throws InvalidParameter when both arguments are zero or either is negative.
std::int64_t gcd(std::int64_t x, std::int64_t y);
std::int64_t gcd(std::int64_t x, std::int64_t y, std::int64_t z);

// x == y (mod m) or x == -y (mod m).
bool cong_pm(std::int64_t x, std::int64_t y, std::int64_t m);

struct LambdaResult {
  // Least lambda >= 1 with lambda * k == gcd(n, k) (mod n).
  std::int64_t lambda = 0;
};

// Linear scan over lambda = 1..n/gcd(n,k). Requires n >= 3 and
// 1 <= k <= n/2.
LambdaResult lambda_min(std::int64_t n, std::int64_t k);

}  // namespace quartic
