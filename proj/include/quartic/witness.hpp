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
#include <utility>
#include <vector>

#include "quartic/graph.hpp"
#include "quartic/oracle.hpp"
#include "quartic/vertex_map.hpp"

namespace quartic {

// Explicit isomorphisms for the accordion and circulant families. Every
// constructor checks its result with verify_witness before returning and
// throws InvariantViolation if that check fails. Each map has a fixed
// direction, noted below; use VertexMap::inverse() for the other one.

// The involution of A[n,k] swapping the two n-cycles: u_1 <-> v_1 and
// u_i <-> v_{2-i}.
VertexMap natural_automorphism(const AccordionParams& p);

// A[n,k2] -> A[n,k1]. Identity when k1 == k2; otherwise relabels the two
// alternating n-cycles through v_1, u_1 and v_2, u_2 of A[n,k1], forward
// when k1 k2 / 2 == -2 (mod n) and backward when it is +2. Throws
// NotIsomorphic if accordions_isomorphic rejects the pair.
VertexMap accordion_iso_witness(std::int64_t n, std::int64_t k1, std::int64_t k2);

// Ci[2n,{1,n-1}] -> Ci[2n,{a,b}], x_i -> x_{ia}. Requires a, b odd,
// gcd(2n,a) = gcd(2n,b) = 1 and a + b = n; otherwise InvalidParameter.
VertexMap mu_map(std::int64_t n, std::int64_t a, std::int64_t b);

// Ci[2n,{a,b}] -> A[n,k]. In the mixed-parity regime this walks the
// length-a cycles X_i of the circulant onto the alternating cycles W_i of
// the accordion. The bipartite regime is handed to
// bipartite_accordion_witness. Throws NotIsomorphic if the decider rejects.
VertexMap circulant_accordion_witness(std::int64_t n, std::int64_t a,
                                      std::int64_t b, std::int64_t k);

// Ci[2n,{a,b}] -> A[n,2], composed as mu^-1 followed by a base map
// Ci[2n,{1,n-1}] -> A[n,2]. The base map comes from the oracle and is
// memoized per n. Throws NotIsomorphic unless a, b odd, gcd(2n,a) =
// gcd(2n,b) = 1 and a + b = n.
VertexMap bipartite_accordion_witness(std::int64_t n, std::int64_t a,
                                      std::int64_t b,
                                      const OracleOptions& options = {});

struct RemarkConstruction {
  // C_{n1} x P_{n2} (vertex (g, h) at g * n2 + h) plus the added edges.
  Graph graph;
  // graph -> A[n,k].
  VertexMap to_accordion;
  std::int64_t gamma = 0;
  // Added edges as 1-based (i, j) meaning r_i l_j; when n2 = 1 both ends
  // are cycle vertices w_i, w_j.
  std::vector<std::pair<int, int>> added;
};

// Rebuilds A[n,k], n = n1 n2 / 2, from C_{n1} x P_{n2} by joining r_i to
// l_{i + 2 gamma}, where l_i and r_i are the two ends of the i-th path copy
// and gamma is the least positive integer with gamma k == n2 (mod n).
// Requires n1 even >= 4, n2 >= 1 and gcd(n, k) = n2.
RemarkConstruction remark_construction(std::int64_t n1, std::int64_t n2,
                                       std::int64_t k,
                                       const OracleOptions& options = {});

}  // namespace quartic
