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

#include "quartic/deciders.hpp"

#include <string>

#include "quartic/error.hpp"
#include "quartic/graph.hpp"
#include "quartic/modarith.hpp"

namespace quartic {

namespace {

bool odd(std::int64_t x) { return x % 2 != 0; }

void check_order_lengths(std::int64_t order, std::int64_t a1, std::int64_t a2) {
  if (order < 5 || order > 2 * static_cast<std::int64_t>(kMaxParameter)) {
    throw InvalidParameter("circulant order must lie in [5, " +
                           std::to_string(2 * kMaxParameter) + "], got " +
                           std::to_string(order));
  }
  const std::int64_t f1 = circulant_length(order, a1);
  const std::int64_t f2 = circulant_length(order, a2);
  if (f1 < 1 || 2 * f1 >= order || f2 < 1 || 2 * f2 >= order || f1 == f2) {
    throw InvalidParameter("circulant lengths {" + std::to_string(a1) + "," +
                           std::to_string(a2) + "} invalid for order " +
                           std::to_string(order));
  }
}

}  // namespace

std::string_view to_string(AccBranch branch) {
  switch (branch) {
    case AccBranch::kEqualK: return "equal-k";
    case AccBranch::kCaseMinus: return "case-minus";
    case AccBranch::kCasePlus: return "case-plus";
    case AccBranch::kNotIsomorphic: return "not-isomorphic";
  }
  return "?";
}

std::string_view to_string(Regime regime) {
  return regime == Regime::kBipartite ? "bipartite" : "non-bipartite";
}

bool accordion_is_bipartite(std::int64_t n, std::int64_t k) {
  AccordionParams::make(n, k);
  return !odd(n) && !odd(k);
}

bool accordion_is_circulant(std::int64_t n, std::int64_t k) {
  AccordionParams::make(n, k);
  return odd(k) || (!odd(k) && odd(n)) || (k == 2 && !odd(n));
}

bool circulant_is_bipartite(std::int64_t n, std::int64_t a, std::int64_t b) {
  const auto p = CirculantParams::make(n, a, b);
  // Each component is the connected circulant Ci[2n/g,{a/g,b/g}], which is
  // bipartite iff both reduced lengths are odd and its order is even. For
  // connected graphs (g = 1) this is just "a and b odd".
  const std::int64_t g = gcd(2 * n, p.a(), p.b());
  return (2 * n / g) % 2 == 0 && odd(p.a() / g) && odd(p.b() / g);
}

bool circulant_is_connected(std::int64_t n, std::int64_t a, std::int64_t b) {
  const auto p = CirculantParams::make(n, a, b);
  return gcd(2 * n, p.a(), p.b()) == 1;
}

AccAccVerdict accordions_isomorphic(std::int64_t n, std::int64_t k1,
                                    std::int64_t k2) {
  AccordionParams::make(n, k1);
  AccordionParams::make(n, k2);
  AccAccVerdict out;
  out.gcd1 = gcd(n, k1);
  out.gcd2 = gcd(n, k2);
  if (out.gcd1 == 2 && out.gcd2 == 2) {
    // Both k are even here, so the halving is exact.
    out.half_product = residue(k1 * k2 / 2, n);
  }
  if (k1 == k2) {
    out.isomorphic = true;
    out.branch = AccBranch::kEqualK;
    return out;
  }
  if (!out.half_product) return out;
  if (*out.half_product == residue(-2, n)) {
    out.isomorphic = true;
    out.branch = AccBranch::kCaseMinus;
  } else if (*out.half_product == residue(2, n)) {
    out.isomorphic = true;
    out.branch = AccBranch::kCasePlus;
  }
  return out;
}

std::optional<std::int64_t> unique_partner(std::int64_t n, std::int64_t k1) {
  AccordionParams::make(n, k1);
  std::optional<std::int64_t> found;
  for (std::int64_t k2 = 1; 2 * k2 <= n; ++k2) {
    if (k2 == k1 || !accordions_isomorphic(n, k1, k2).isomorphic) continue;
    if (found) {
      throw InvariantViolation("A[" + std::to_string(n) + "," +
                               std::to_string(k1) + "] has two partners: " +
                               std::to_string(*found) + " and " +
                               std::to_string(k2));
    }
    found = k2;
  }
  return found;
}

bool circulant_iso_torus(std::int64_t nprime, std::int64_t a1, std::int64_t a2,
                         std::int64_t n1, std::int64_t n2) {
  if (n1 < 3 || n2 < 3) {
    throw InvalidParameter("torus factors must be cycles (n1, n2 >= 3), got " +
                           std::to_string(n1) + ", " + std::to_string(n2));
  }
  check_order_lengths(nprime, a1, a2);
  if (nprime != n1 * n2) return false;
  const std::int64_t g1 = gcd(nprime, circulant_length(nprime, a1));
  const std::int64_t g2 = gcd(nprime, circulant_length(nprime, a2));
  const bool paired = (g1 == n1 && g2 == n2) || (g1 == n2 && g2 == n1);
  return paired && gcd(n1, n2) == 1;
}

std::optional<std::pair<std::int64_t, std::int64_t>> find_torus_factors(
    std::int64_t nprime, std::int64_t a1, std::int64_t a2) {
  check_order_lengths(nprime, a1, a2);
  for (std::int64_t n1 = 3; n1 * n1 <= nprime; ++n1) {
    if (nprime % n1 != 0) continue;
    const std::int64_t n2 = nprime / n1;
    if (circulant_iso_torus(nprime, a1, a2, n1, n2)) return std::pair{n1, n2};
  }
  return std::nullopt;
}

CiAccVerdict circulant_iso_accordion(std::int64_t n, std::int64_t a,
                                     std::int64_t b, std::int64_t k) {
  const auto p = CirculantParams::make(n, a, b);
  AccordionParams::make(n, k);
  CiAccVerdict out;
  out.matched_k = k;
  out.a = p.a();
  out.b = p.b();
  if (!odd(out.a) && !odd(out.b)) {
    throw NotApplicable("Ci[" + std::to_string(2 * n) + ",{" +
                        std::to_string(out.a) + "," + std::to_string(out.b) +
                        "}] has two even lengths and is disconnected");
  }
  if (odd(out.a) != odd(out.b) && !odd(out.a)) {
    std::swap(out.a, out.b);
    out.swapped = true;
  }
  out.gcd_2n_a = gcd(2 * n, out.a);
  out.gcd_2n_b = gcd(2 * n, out.b);
  out.gcd_n_k = gcd(n, k);

  if (odd(out.a) && odd(out.b)) {
    out.regime = Regime::kBipartite;
    out.connected = gcd(2 * n, out.a, out.b) == 1;
    out.isomorphic = !odd(n) && k == 2 && out.gcd_2n_a == 1 &&
                     out.gcd_2n_b == 1 && out.a + out.b == n;
    return out;
  }

  out.regime = Regime::kNonBipartite;
  out.lambda = lambda_min(n, k).lambda;
  const std::int64_t lhs = out.b * out.gcd_n_k;
  const std::int64_t rhs = 2 * *out.lambda * out.a;
  if (residue(lhs - rhs, 2 * n) == 0) {
    out.sign = +1;
  } else if (residue(lhs + rhs, 2 * n) == 0) {
    out.sign = -1;
  }
  const bool parity_ok = odd(n) || odd(k);
  // The arithmetic conditions alone also admit disconnected circulants such
  // as Ci[24,{3,6}] vs A[12,3]; accordions are connected, so require it.
  out.connected = gcd(2 * n, out.a, out.b) == 1;
  out.isomorphic = parity_ok && out.connected && out.gcd_2n_a == out.gcd_n_k &&
                   out.sign != 0;
  return out;
}

std::optional<std::int64_t> find_accordion_param(std::int64_t n, std::int64_t a,
                                                 std::int64_t b) {
  const auto p = CirculantParams::make(n, a, b);
  if (!odd(p.a()) && !odd(p.b())) return std::nullopt;
  for (std::int64_t k = 1; 2 * k <= n; ++k) {
    if (circulant_iso_accordion(n, a, b, k).isomorphic) return k;
  }
  return std::nullopt;
}

}  // namespace quartic
