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
#include <optional>
#include <string_view>
#include <utility>

namespace quartic {

// Constant-time isomorphism predicates for accordion graphs A[n,k], quartic
// circulants Ci[2n,{a,b}] and tori C_{n1} x C_{n2}. Inputs are validated
// with the same rules as AccordionParams / CirculantParams and rejected
// with InvalidParameter.

bool accordion_is_bipartite(std::int64_t n, std::int64_t k);
bool accordion_is_circulant(std::int64_t n, std::int64_t k);
// Both lengths odd when connected; disconnected graphs are judged per
// component (e.g. Ci[16,{2,6}] is two copies of Ci[8,{1,3}]).
bool circulant_is_bipartite(std::int64_t n, std::int64_t a, std::int64_t b);
bool circulant_is_connected(std::int64_t n, std::int64_t a, std::int64_t b);

enum class AccBranch {
  kEqualK,
  kCaseMinus,  // k1 k2 / 2 == -2 (mod n)
  kCasePlus,   // k1 k2 / 2 == +2 (mod n)
  kNotIsomorphic,
};

std::string_view to_string(AccBranch branch);

struct AccAccVerdict {
  bool isomorphic = false;
  AccBranch branch = AccBranch::kNotIsomorphic;
  std::int64_t gcd1 = 0;  // gcd(n, k1)
  std::int64_t gcd2 = 0;  // gcd(n, k2)
  // k1 k2 / 2 mod n; only set when both gcds equal 2.
  std::optional<std::int64_t> half_product;
};

// A[n,k1] vs A[n,k2]. Equal k is trivially isomorphic. Otherwise both
// gcd(n,k_i) must be 2 and k1 k2 / 2 == +-2 (mod n).
AccAccVerdict accordions_isomorphic(std::int64_t n, std::int64_t k1,
                                    std::int64_t k2);

// The single k2 != k1 in [1, n/2] with A[n,k1] ~ A[n,k2], if any. Throws
// InvariantViolation if the scan finds two.
std::optional<std::int64_t> unique_partner(std::int64_t n, std::int64_t k1);

// Ci[nprime,{a1,a2}] vs C_{n1} x C_{n2}: nprime = n1 n2, the gcds
// {gcd(nprime,a1), gcd(nprime,a2)} equal {n1, n2} as paired, and
// gcd(n1, n2) = 1. Any order nprime >= 5 is accepted; n1, n2 >= 3.
bool circulant_iso_torus(std::int64_t nprime, std::int64_t a1, std::int64_t a2,
                         std::int64_t n1, std::int64_t n2);

// Scans the divisor pairs n1 <= n2 of nprime (both >= 3) for one that
// satisfies circulant_iso_torus.
std::optional<std::pair<std::int64_t, std::int64_t>> find_torus_factors(
    std::int64_t nprime, std::int64_t a1, std::int64_t a2);

enum class Regime { kBipartite, kNonBipartite };

std::string_view to_string(Regime regime);

struct CiAccVerdict {
  bool isomorphic = false;
  Regime regime = Regime::kBipartite;
  std::int64_t matched_k = 0;
  // Folded lengths after orientation: in the non-bipartite regime a is the
  // odd one. `swapped` records whether the inputs were exchanged.
  std::int64_t a = 0;
  std::int64_t b = 0;
  bool swapped = false;
  std::int64_t gcd_2n_a = 0;
  std::int64_t gcd_2n_b = 0;
  std::int64_t gcd_n_k = 0;
  // gcd(2n, a, b) == 1.
  bool connected = false;
  // Non-bipartite regime only.
  std::optional<std::int64_t> lambda;
  // +1 if b q == 2 lambda a (mod 2n), -1 if only b q == -2 lambda a,
  // 0 if neither or not applicable.
  int sign = 0;
};

// Ci[2n,{a,b}] vs A[n,k].
//   both odd:     n even, k = 2, gcd(2n,a) = gcd(2n,b) = 1, a + b = n.
//   mixed parity: k odd when n even, gcd(2n,a) = gcd(n,k), and
//                 b gcd(n,k) == +-2 lambda a (mod 2n).
// Throws NotApplicable when both lengths are even (disconnected circulant).
CiAccVerdict circulant_iso_accordion(std::int64_t n, std::int64_t a,
                                     std::int64_t b, std::int64_t k);

// First k in [1, n/2] with circulant_iso_accordion true. Both-even inputs
// yield nullopt.
std::optional<std::int64_t> find_accordion_param(std::int64_t n, std::int64_t a,
                                                 std::int64_t b);

}  // namespace quartic
