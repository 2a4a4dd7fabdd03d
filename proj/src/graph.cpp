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

#include "quartic/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "quartic/error.hpp"
#include "quartic/modarith.hpp"

namespace quartic {

namespace {

std::string edge_text(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

void check_n(long long n, const char* what) {
  if (n < 3 || n > kMaxParameter) {
    throw InvalidParameter(std::string(what) + ": n must lie in [3, " +
                           std::to_string(kMaxParameter) + "], got " +
                           std::to_string(n));
  }
}

}  // namespace

Graph::Graph(int order, std::vector<Edge> edges) : order_(order) {
  if (order < 0) throw InvalidParameter("graph order must be nonnegative");
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= order) {
      throw InvalidParameter("edge " + edge_text(e) + " out of range for order " +
                             std::to_string(order));
    }
    if (e.u == e.v) throw InvalidParameter("self-loop at " + std::to_string(e.u));
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end());
      dup != edges.end()) {
    throw InvalidParameter("duplicate edge " + edge_text(*dup));
  }
  edges_ = std::move(edges);

  std::vector<int> degree(order, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(order + 1, 0);
  for (int v = 0; v < order; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[order]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < order; ++v) {
    std::sort(adjacency_.begin() + offsets_[v],
              adjacency_.begin() + offsets_[v + 1]);
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= order_ || b >= order_) return false;
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

AccordionParams AccordionParams::make(long long n, long long k) {
  check_n(n, "accordion");
  if (k < 1 || 2 * k > n) {
    throw InvalidParameter("accordion: k must lie in [1, n/2], got n=" +
                           std::to_string(n) + " k=" + std::to_string(k));
  }
  return {static_cast<int>(n), static_cast<int>(k)};
}

Vertex AccordionParams::u(long long i) const {
  return static_cast<Vertex>(residue(i - 1, n_));
}

Vertex AccordionParams::v(long long i) const {
  return n_ + static_cast<Vertex>(residue(i - 1, n_));
}

int circulant_length(long long order, long long x) {
  const long long r = residue(x, order);
  return static_cast<int>(std::min(r, order - r));
}

CirculantParams CirculantParams::make(long long n, long long a, long long b) {
  check_n(n, "circulant");
  const int fa = circulant_length(2 * n, a);
  const int fb = circulant_length(2 * n, b);
  auto bad = [&](const std::string& why) {
    return InvalidParameter("circulant Ci[" + std::to_string(2 * n) + ",{" +
                            std::to_string(a) + "," + std::to_string(b) +
                            "}]: " + why);
  };
  if (fa < 1 || fa >= n || fb < 1 || fb >= n) {
    throw bad("lengths must fold into [1, n-1]");
  }
  if (fa == fb) throw bad("lengths must be distinct");
  return {static_cast<int>(n), fa, fb};
}

Vertex CirculantParams::x(long long i) const {
  return static_cast<Vertex>(residue(i - 1, order()));
}

Graph cycle_graph(int t) {
  if (t < 3) throw InvalidParameter("cycle needs t >= 3, got " + std::to_string(t));
  std::vector<Edge> edges;
  edges.reserve(t);
  for (int i = 0; i < t; ++i) edges.push_back({i, (i + 1) % t});
  return {t, std::move(edges)};
}

Graph path_graph(int t) {
  if (t < 1) throw InvalidParameter("path needs t >= 1, got " + std::to_string(t));
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < t; ++i) edges.push_back({i, i + 1});
  return {t, std::move(edges)};
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) {
    throw InvalidParameter("cartesian product of an empty graph");
  }
  const int m = h.order();
  std::vector<Edge> edges;
  edges.reserve(g.order() * h.size() + m * g.size());
  for (int x = 0; x < g.order(); ++x) {
    for (const Edge& e : h.edges()) edges.push_back({x * m + e.u, x * m + e.v});
  }
  for (const Edge& e : g.edges()) {
    for (int y = 0; y < m; ++y) edges.push_back({e.u * m + y, e.v * m + y});
  }
  return {g.order() * m, std::move(edges)};
}

TaggedGraph accordion_tagged(const AccordionParams& p) {
  std::vector<std::pair<Edge, EdgeClass>> tagged;
  tagged.reserve(4 * p.n());
  auto add = [&](Vertex a, Vertex b, AccordionEdgeKind kind) {
    tagged.push_back({Edge{std::min(a, b), std::max(a, b)}, kind});
  };
  for (int i = 1; i <= p.n(); ++i) {
    add(p.u(i), p.u(i + 1), AccordionEdgeKind::kOuterCycle);
    add(p.v(i), p.v(i + 1), AccordionEdgeKind::kInnerCycle);
    add(p.u(i), p.v(i), AccordionEdgeKind::kVerticalSpoke);
    add(p.u(i), p.v(i + p.k()), AccordionEdgeKind::kDiagonalSpoke);
  }
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  TaggedGraph out;
  std::vector<Edge> edges;
  for (auto& [e, c] : tagged) {
    edges.push_back(e);
    out.classes.push_back(c);
  }
  out.graph = Graph(p.order(), std::move(edges));
  return out;
}

Graph accordion(const AccordionParams& p) { return accordion_tagged(p).graph; }

Graph accordion_cut(const AccordionParams& p) {
  const int q = static_cast<int>(gcd(p.n(), p.k()));
  std::vector<Edge> removed;
  for (int t = 1; t <= p.n() / q; ++t) {
    const Vertex a = p.u(t * q), b = p.u(t * q + 1);
    const Vertex c = p.v(t * q), d = p.v(t * q + 1);
    removed.push_back({std::min(a, b), std::max(a, b)});
    removed.push_back({std::min(c, d), std::max(c, d)});
  }
  std::sort(removed.begin(), removed.end());
  const Graph full = accordion(p);
  std::vector<Edge> kept;
  for (const Edge& e : full.edges()) {
    if (!std::binary_search(removed.begin(), removed.end(), e)) kept.push_back(e);
  }
  return {p.order(), std::move(kept)};
}

namespace {

TaggedGraph circulant_tagged_of_order(int order, int a, int b) {
  std::vector<std::pair<Edge, EdgeClass>> tagged;
  tagged.reserve(2 * order);
  for (int len : {a, b}) {
    for (int i = 0; i < order; ++i) {
      const Vertex j = (i + len) % order;
      tagged.push_back({Edge{std::min(i, j), std::max(i, j)}, EdgeLength{len}});
    }
  }
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  TaggedGraph out;
  std::vector<Edge> edges;
  for (auto& [e, c] : tagged) {
    edges.push_back(e);
    out.classes.push_back(c);
  }
  out.graph = Graph(order, std::move(edges));
  return out;
}

}  // namespace

TaggedGraph circulant_tagged(const CirculantParams& p) {
  return circulant_tagged_of_order(p.order(), p.a(), p.b());
}

Graph circulant(const CirculantParams& p) { return circulant_tagged(p).graph; }

Graph circulant_of_order(int order, long long a, long long b) {
  if (order < 5 || order > 2 * kMaxParameter) {
    throw InvalidParameter("quartic circulant needs order >= 5, got " +
                           std::to_string(order));
  }
  const int fa = circulant_length(order, a);
  const int fb = circulant_length(order, b);
  if (fa < 1 || 2 * fa >= order || fb < 1 || 2 * fb >= order || fa == fb) {
    throw InvalidParameter("circulant lengths {" + std::to_string(a) + "," +
                           std::to_string(b) + "} invalid for order " +
                           std::to_string(order));
  }
  return circulant_tagged_of_order(order, fa, fb).graph;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  std::queue<Vertex> frontier;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      const Vertex x = frontier.front();
      frontier.pop();
      for (Vertex y : g.neighbors(x)) {
        if (side[y] == -1) {
          side[y] = 1 - side[x];
          frontier.push(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == g.order();
}

bool is_regular(const Graph& g, int d) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

}  // namespace quartic
