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

#include <doctest.h>

#include "quartic/error.hpp"
#include "quartic/graph.hpp"
#include "quartic/oracle.hpp"

namespace quartic {
namespace {

Graph acc(int n, int k) { return accordion(AccordionParams::make(n, k)); }
Graph ci(int n, int a, int b) { return circulant(CirculantParams::make(n, a, b)); }

TEST_CASE("accordion_is_bipartite") {
  CHECK(accordion_is_bipartite(4, 2));
  CHECK_FALSE(accordion_is_bipartite(5, 2));
  CHECK_FALSE(accordion_is_bipartite(4, 1));
  CHECK_THROWS_AS(accordion_is_bipartite(4, 3), InvalidParameter);
}

TEST_CASE("accordion_is_circulant") {
  CHECK(accordion_is_circulant(6, 3));
  CHECK(accordion_is_circulant(4, 2));
  CHECK(accordion_is_circulant(7, 2));
  CHECK_FALSE(accordion_is_circulant(8, 4));
  CHECK_FALSE(accordion_is_circulant(12, 4));
  CHECK_THROWS_AS(accordion_is_circulant(2, 1), InvalidParameter);
}

TEST_CASE("circulant bipartite and connected criteria") {
  CHECK(circulant_is_bipartite(4, 1, 3));
  CHECK_FALSE(circulant_is_bipartite(3, 1, 2));
  CHECK(circulant_is_bipartite(6, 3, 5));
  CHECK(is_bipartite(ci(6, 3, 5)));
  // Disconnected: two copies of Ci[8,{1,3}].
  CHECK(circulant_is_bipartite(8, 2, 6));
  CHECK(is_bipartite(ci(8, 2, 6)));
  // Two copies of Ci[6,{1,2}].
  CHECK_FALSE(circulant_is_bipartite(6, 2, 4));

  CHECK(circulant_is_connected(6, 2, 3));
  CHECK(is_connected(ci(6, 2, 3)));
  CHECK_FALSE(circulant_is_connected(6, 2, 4));
  CHECK_FALSE(is_connected(ci(6, 2, 4)));
  CHECK(circulant_is_connected(4, 1, 3));
  CHECK_THROWS_AS(circulant_is_connected(4, 2, 2), InvalidParameter);
}

TEST_CASE("accordions_isomorphic examples") {
  const auto yes = accordions_isomorphic(14, 4, 6);
  CHECK(yes.isomorphic);
  CHECK(yes.branch == AccBranch::kCaseMinus);
  CHECK(yes.half_product == 12);
  CHECK(are_isomorphic(acc(14, 4), acc(14, 6)));

  const auto no = accordions_isomorphic(10, 2, 4);
  CHECK_FALSE(no.isomorphic);
  CHECK(no.branch == AccBranch::kNotIsomorphic);
  CHECK_FALSE(are_isomorphic(acc(10, 2), acc(10, 4)));

  for (int n = 3; n <= 12; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      const auto same = accordions_isomorphic(n, k, k);
      CHECK(same.isomorphic);
      CHECK(same.branch == AccBranch::kEqualK);
    }
  }
  CHECK_THROWS_AS(accordions_isomorphic(10, 2, 6), InvalidParameter);
}

TEST_CASE("accordions_isomorphic case-plus branch") {
  // n = 18: k1 = 4, k2 = 8 gives 16 == -2; k1 = 2, k2 = 2... search a + case.
  bool seen_plus = false;
  for (int n = 5; n <= 40 && !seen_plus; ++n) {
    for (int k1 = 1; 2 * k1 <= n; ++k1) {
      for (int k2 = k1 + 1; 2 * k2 <= n; ++k2) {
        const auto v = accordions_isomorphic(n, k1, k2);
        if (v.branch == AccBranch::kCasePlus) {
          seen_plus = true;
          CHECK(v.gcd1 == 2);
          CHECK(v.gcd2 == 2);
          CHECK(*v.half_product == 2);
        }
      }
    }
  }
  CHECK(seen_plus);
  // 6 * 10 / 2 = 30 == 2 (mod 28).
  CHECK(accordions_isomorphic(28, 6, 10).branch == AccBranch::kCasePlus);
}

TEST_CASE("accordion verdict is symmetric in k1, k2") {
  for (int n = 3; n <= 40; ++n) {
    for (int k1 = 1; 2 * k1 <= n; ++k1) {
      for (int k2 = 1; 2 * k2 <= n; ++k2) {
        const auto l = accordions_isomorphic(n, k1, k2);
        const auto r = accordions_isomorphic(n, k2, k1);
        CHECK(l.isomorphic == r.isomorphic);
        CHECK(l.branch == r.branch);
      }
    }
  }
}

TEST_CASE("unique_partner") {
  CHECK(unique_partner(14, 4) == 6);
  CHECK(unique_partner(14, 6) == 4);
  CHECK_FALSE(unique_partner(10, 2).has_value());
  CHECK_FALSE(unique_partner(3, 1).has_value());
}

TEST_CASE("at most one partner for every n <= 60") {
  for (int n = 3; n <= 60; ++n) {
    for (int k1 = 1; 2 * k1 <= n; ++k1) {
      int partners = 0;
      for (int k2 = 1; 2 * k2 <= n; ++k2) {
        if (k2 != k1 && accordions_isomorphic(n, k1, k2).isomorphic) ++partners;
      }
      CAPTURE(n);
      CAPTURE(k1);
      CHECK(partners <= 1);
      CHECK_NOTHROW(unique_partner(n, k1));
    }
  }
}

TEST_CASE("circulant_iso_torus") {
  CHECK(circulant_iso_torus(12, 3, 4, 3, 4));
  CHECK(circulant_iso_torus(12, 3, 4, 4, 3));
  CHECK(are_isomorphic(circulant_of_order(12, 3, 4),
                       cartesian_product(cycle_graph(3), cycle_graph(4))));
  CHECK(circulant_iso_torus(36, 4, 9, 4, 9));
  CHECK(are_isomorphic(circulant_of_order(36, 4, 9),
                       cartesian_product(cycle_graph(4), cycle_graph(9))));
  CHECK_THROWS_AS(circulant_iso_torus(12, 2, 3, 2, 3), InvalidParameter);
  CHECK_FALSE(circulant_iso_torus(12, 3, 4, 3, 5));
  CHECK_FALSE(circulant_iso_torus(36, 2, 9, 4, 9));
  CHECK_FALSE(circulant_iso_torus(36, 6, 9, 6, 6));  // gcd(6,6) != 1
  CHECK(circulant_iso_torus(15, 3, 5, 3, 5));
  CHECK_THROWS_AS(circulant_iso_torus(12, 3, 9, 3, 4), InvalidParameter);
}

TEST_CASE("find_torus_factors") {
  CHECK(find_torus_factors(12, 3, 4) == std::pair<std::int64_t, std::int64_t>{3, 4});
  CHECK(find_torus_factors(36, 9, 4) == std::pair<std::int64_t, std::int64_t>{4, 9});
  CHECK_FALSE(find_torus_factors(12, 1, 5).has_value());
}

TEST_CASE("circulant_iso_accordion examples") {
  const auto bip = circulant_iso_accordion(4, 1, 3, 2);
  CHECK(bip.isomorphic);
  CHECK(bip.regime == Regime::kBipartite);
  CHECK(bip.matched_k == 2);

  const auto nonbip = circulant_iso_accordion(3, 1, 2, 1);
  CHECK(nonbip.isomorphic);
  CHECK(nonbip.regime == Regime::kNonBipartite);
  CHECK(nonbip.gcd_2n_a == 1);
  CHECK(nonbip.gcd_n_k == 1);
  CHECK(nonbip.lambda == 1);
  CHECK(nonbip.sign == +1);

  CHECK_FALSE(circulant_iso_accordion(4, 1, 3, 1).isomorphic);
  CHECK_FALSE(are_isomorphic(ci(4, 1, 3), acc(4, 1)));
}

TEST_CASE("disconnected circulants are never accordions") {
  // gcd(24,3) = gcd(12,3) = 3, lambda = 1 and 6 * 3 == -2 * 3 (mod 24), yet
  // gcd(24,3,6) = 3 so the circulant falls apart into three pieces.
  const auto v = circulant_iso_accordion(12, 3, 6, 3);
  CHECK(v.gcd_2n_a == v.gcd_n_k);
  CHECK(v.sign == -1);
  CHECK_FALSE(v.connected);
  CHECK_FALSE(v.isomorphic);
  CHECK_FALSE(is_connected(ci(12, 3, 6)));
  CHECK_FALSE(are_isomorphic(ci(12, 3, 6), acc(12, 3)).has_value());
  CHECK_FALSE(circulant_iso_accordion(15, 5, 10, 5).isomorphic);
  CHECK(circulant_iso_accordion(3, 1, 2, 1).connected);
}

TEST_CASE("circulant_iso_accordion orients mixed parity") {
  const auto v = circulant_iso_accordion(3, 2, 1, 1);
  CHECK(v.swapped);
  CHECK(v.a == 1);
  CHECK(v.b == 2);
  CHECK(v.isomorphic);
  CHECK_FALSE(circulant_iso_accordion(3, 1, 2, 1).swapped);
}

TEST_CASE("circulant_iso_accordion rejects two even lengths") {
  CHECK_THROWS_AS(circulant_iso_accordion(6, 2, 4, 1), NotApplicable);
  CHECK_THROWS_AS(circulant_iso_accordion(6, 1, 3, 4), InvalidParameter);
  CHECK_THROWS_AS(circulant_iso_accordion(6, 1, 1, 2), InvalidParameter);
}

TEST_CASE("find_accordion_param") {
  CHECK(find_accordion_param(4, 1, 3) == 2);
  CHECK(find_accordion_param(3, 1, 2) == 1);
  CHECK_FALSE(find_accordion_param(6, 2, 4).has_value());
  for (int k = 1; k <= 3; ++k) CHECK_FALSE(are_isomorphic(ci(6, 2, 4), acc(6, k)));
}

TEST_CASE("A[n,2] matches Ci[2n,{1,n-1}] for even n") {
  for (int n = 4; n <= 12; n += 2) {
    CHECK(circulant_iso_accordion(n, 1, n - 1, 2).isomorphic);
  }
}

TEST_CASE("circulance criterion agrees with the circulant-accordion deciders") {
  for (int n = 3; n <= 30; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      bool found = false;
      for (int a = 1; a < n && !found; ++a) {
        for (int b = a + 1; b < n && !found; ++b) {
          if (a % 2 == 0 && b % 2 == 0) continue;
          found = circulant_iso_accordion(n, a, b, k).isomorphic;
        }
      }
      CAPTURE(n);
      CAPTURE(k);
      CHECK(found == accordion_is_circulant(n, k));
    }
  }
}

TEST_CASE("regime consistency with built graphs") {
  for (int n = 3; n <= 10; ++n) {
    for (int a = 1; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (a % 2 == 0 && b % 2 == 0) continue;
        for (int k = 1; 2 * k <= n; ++k) {
          const auto v = circulant_iso_accordion(n, a, b, k);
          CHECK((v.regime == Regime::kBipartite) == is_bipartite(ci(n, a, b)));
          if (v.isomorphic) {
            CHECK(is_bipartite(ci(n, a, b)) == is_bipartite(acc(n, k)));
          }
        }
      }
    }
  }
}

TEST_CASE("inputs beyond the supported width are rejected") {
  CHECK_THROWS_AS(accordions_isomorphic(kMaxParameter + 1LL, 2, 4), InvalidParameter);
  CHECK_NOTHROW(accordions_isomorphic(kMaxParameter, kMaxParameter / 2 - 1,
                                      kMaxParameter / 2));
}

}  // namespace
}  // namespace quartic
