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

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "quartic/graph.hpp"
#include "quartic/vertex_map.hpp"

namespace quartic::testing {

// Tries every permutation. Only for graphs of at most ~8 vertices.
inline bool brute_force_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (!h.has_edge(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline VertexMap random_permutation(int order, std::mt19937_64& rng) {
  std::vector<Vertex> perm(order);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return VertexMap(std::move(perm));
}

inline Graph random_graph(int order, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (int i = 0; i < order; ++i) {
    for (int j = i + 1; j < order; ++j) {
      if (coin(rng)) edges.push_back({i, j});
    }
  }
  return {order, std::move(edges)};
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const Edge& e : h.edges()) {
    edges.push_back({e.u + g.order(), e.v + g.order()});
  }
  return {g.order() + h.order(), std::move(edges)};
}

inline std::vector<int> degree_histogram(const Graph& g) {
  std::vector<int> hist;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= static_cast<int>(hist.size())) hist.resize(g.degree(v) + 1);
    ++hist[g.degree(v)];
  }
  return hist;
}

}  // namespace quartic::testing
