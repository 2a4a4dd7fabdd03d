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

#include "quartic/witness.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "quartic/deciders.hpp"
#include "quartic/error.hpp"
#include "quartic/modarith.hpp"

namespace quartic {

namespace {

VertexMap checked(const Graph& from, const Graph& to, std::vector<Vertex> mapping,
                  const std::string& what) {
  VertexMap m(std::move(mapping));
  if (!verify_witness(from, to, m)) {
    throw InvariantViolation(what + ": constructed map fails verification");
  }
  return m;
}

// Fills mapping[from] = to and rejects double assignment.
void assign(std::vector<Vertex>& mapping, Vertex from, Vertex to,
            const std::string& what) {
  if (mapping[from] != -1) {
    throw InvariantViolation(what + ": vertex " + std::to_string(from) +
                             " assigned twice");
  }
  mapping[from] = to;
}

// Ci[2n,{1,n-1}] -> A[n,2], found once per n by the oracle.
VertexMap base_bipartite_map(std::int64_t n, const OracleOptions& options) {
  static std::shared_mutex mutex;
  static std::map<std::int64_t, VertexMap> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  const Graph ci = circulant(CirculantParams::make(n, 1, n - 1));
  const Graph acc = accordion(AccordionParams::make(n, 2));
  auto found = are_isomorphic(ci, acc, options);
  if (!found) {
    throw InvariantViolation("oracle found no map Ci[" + std::to_string(2 * n) +
                             ",{1," + std::to_string(n - 1) + "}] -> A[" +
                             std::to_string(n) + ",2]");
  }
  std::unique_lock lock(mutex);
  return cache.emplace(n, std::move(*found)).first->second;
}

}  // namespace

VertexMap natural_automorphism(const AccordionParams& p) {
  const int n = p.n();
  std::vector<Vertex> m(p.order());
  for (int i = 1; i <= n; ++i) {
    // 2 - i folded into {1..n}; i = 1 gives 1.
    const std::int64_t image = residue(2 - i - 1, n) + 1;
    m[p.u(i)] = p.v(image);
    m[p.v(i)] = p.u(image);
  }
  const Graph g = accordion(p);
  return checked(g, g, std::move(m), "natural_automorphism");
}

VertexMap accordion_iso_witness(std::int64_t n, std::int64_t k1, std::int64_t k2) {
  const AccAccVerdict verdict = accordions_isomorphic(n, k1, k2);
  if (!verdict.isomorphic) {
    throw NotIsomorphic("A[" + std::to_string(n) + "," + std::to_string(k1) +
                        "] and A[" + std::to_string(n) + "," +
                        std::to_string(k2) + "] are not isomorphic");
  }
  if (verdict.branch == AccBranch::kEqualK) {
    return VertexMap::identity(static_cast<int>(2 * n));
  }
  const auto source = AccordionParams::make(n, k2);
  const auto target = AccordionParams::make(n, k1);

  // Alternating cycles (v_s, u_s, v_{s+k1}, u_{s+k1}, ...) for s = 1, 2.
  auto alternating = [&](int start) {
    std::vector<Vertex> cycle;
    for (std::int64_t j = 0; 2 * j < n; ++j) {
      cycle.push_back(target.v(start + j * k1));
      cycle.push_back(target.u(start + j * k1));
    }
    return cycle;
  };
  const auto c1 = alternating(1);
  const auto c2 = alternating(2);

  std::vector<Vertex> m(2 * n, -1);
  for (std::int64_t j = 1; j <= n; ++j) {
    const std::int64_t pos = verdict.branch == AccBranch::kCaseMinus
                                 ? j - 1
                                 : residue(1 - j, n);
    assign(m, source.u(j), c1[pos], "accordion_iso_witness");
    assign(m, source.v(j), c2[pos], "accordion_iso_witness");
  }
  return checked(accordion(source), accordion(target), std::move(m),
                 "accordion_iso_witness");
}

VertexMap mu_map(std::int64_t n, std::int64_t a, std::int64_t b) {
  const auto target = CirculantParams::make(n, a, b);
  const std::int64_t la = target.a(), lb = target.b();
  if (la % 2 == 0 || lb % 2 == 0 || gcd(2 * n, la) != 1 || gcd(2 * n, lb) != 1 ||
      la + lb != n) {
    throw InvalidParameter("mu_map needs odd a, b coprime to 2n with a + b = n");
  }
  const auto source = CirculantParams::make(n, 1, n - 1);
  std::vector<Vertex> m(2 * n);
  for (std::int64_t i = 1; i <= 2 * n; ++i) m[source.x(i)] = target.x(i * la);
  return checked(circulant(source), circulant(target), std::move(m), "mu_map");
}

VertexMap bipartite_accordion_witness(std::int64_t n, std::int64_t a,
                                      std::int64_t b,
                                      const OracleOptions& options) {
  const auto params = CirculantParams::make(n, a, b);
  if (params.a() % 2 == 0 || params.b() % 2 == 0 ||
      !circulant_iso_accordion(n, a, b, 2).isomorphic) {
    throw NotIsomorphic("Ci[" + std::to_string(2 * n) + ",{" + std::to_string(a) +
                        "," + std::to_string(b) + "}] is not isomorphic to A[" +
                        std::to_string(n) + ",2]");
  }
  const VertexMap base = base_bipartite_map(n, options);
  const VertexMap composed = mu_map(n, a, b).inverse().then(base);
  const auto acc = accordion(AccordionParams::make(n, 2));
  if (!verify_witness(circulant(params), acc, composed)) {
    throw InvariantViolation("bipartite_accordion_witness: composition fails");
  }
  return composed;
}

VertexMap circulant_accordion_witness(std::int64_t n, std::int64_t a,
                                      std::int64_t b, std::int64_t k) {
  const CiAccVerdict verdict = circulant_iso_accordion(n, a, b, k);
  if (!verdict.isomorphic) {
    throw NotIsomorphic("Ci[" + std::to_string(2 * n) + ",{" + std::to_string(a) +
                        "," + std::to_string(b) + "}] is not isomorphic to A[" +
                        std::to_string(n) + "," + std::to_string(k) + "]");
  }
  if (verdict.regime == Regime::kBipartite) {
    return bipartite_accordion_witness(n, a, b);
  }
  const auto ci = CirculantParams::make(n, a, b);
  const auto acc = AccordionParams::make(n, k);
  const std::int64_t la = verdict.a, lb = verdict.b;
  const std::int64_t q = verdict.gcd_n_k;
  const std::int64_t p = 2 * n / q;

  std::vector<Vertex> m(2 * n, -1);
  for (std::int64_t i = 1; i <= q; ++i) {
    for (std::int64_t step = 0; step < p; ++step) {
      // X_i walks x_{a+ib}, x_{2a+ib}, ... for the + sign and
      // x_{a+ib}, x_{ib}, ... for the - sign.
      const std::int64_t offset = verdict.sign > 0 ? step + 1 : 1 - step;
      const Vertex from = ci.x(offset * la + i * lb);
      const std::int64_t shift = i + (step / 2) * k;
      const Vertex to = step % 2 == 0 ? acc.v(shift) : acc.u(shift);
      assign(m, from, to, "circulant_accordion_witness");
    }
  }
  return checked(circulant(ci), accordion(acc), std::move(m),
                 "circulant_accordion_witness");
}

RemarkConstruction remark_construction(std::int64_t n1, std::int64_t n2,
                                       std::int64_t k,
                                       const OracleOptions& options) {
  if (n1 < 4 || n1 % 2 != 0 || n2 < 1) {
    throw InvalidParameter("remark_construction needs even n1 >= 4 and n2 >= 1");
  }
  const std::int64_t n = n1 * n2 / 2;
  const auto acc = AccordionParams::make(n, k);
  if (gcd(n, k) != n2) {
    throw InvalidParameter("remark_construction: gcd(" + std::to_string(n) + "," +
                           std::to_string(k) + ") != " + std::to_string(n2));
  }
  RemarkConstruction out;
  out.gamma = lambda_min(n, k).lambda;

  const Graph base =
      n2 == 1 ? cycle_graph(static_cast<int>(n1))
              : cartesian_product(cycle_graph(static_cast<int>(n1)),
                                  path_graph(static_cast<int>(n2)));
  auto left = [&](std::int64_t i) { return static_cast<Vertex>((i - 1) * n2); };
  auto right = [&](std::int64_t i) {
    return static_cast<Vertex>((i - 1) * n2 + n2 - 1);
  };
  std::vector<Edge> edges(base.edges().begin(), base.edges().end());
  for (std::int64_t i = 1; i <= n1; ++i) {
    const std::int64_t j = residue(i - 1 + 2 * out.gamma, n1) + 1;
    edges.push_back({right(i), left(j)});
    out.added.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  out.graph = Graph(base.order(), std::move(edges));

  auto found = are_isomorphic(out.graph, accordion(acc), options);
  if (!found) {
    throw InvariantViolation("remark_construction: result is not A[" +
                             std::to_string(n) + "," + std::to_string(k) + "]");
  }
  out.to_accordion = std::move(*found);
  return out;
}

}  // namespace quartic
