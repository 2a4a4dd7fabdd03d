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

#include <compare>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace quartic {

using Vertex = int;

// Upper bound on n for family parameters. Keeps every product the deciders
// form (at most 4 n^2) well inside 64-bit range.
inline constexpr int kMaxParameter = 1'000'000;

// Unordered pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..order-1. Immutable once built; the
// edge list is kept sorted so equal graphs compare and serialize identically.
class Graph {
 public:
  Graph() = default;

  // Accepts pairs in either orientation and any order. Throws
  // InvalidParameter on self-loops, duplicates or out-of-range endpoints.
  Graph(int order, std::vector<Edge> edges);

  int order() const { return order_; }
  std::size_t size() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& lhs, const Graph& rhs) {
    return lhs.order_ == rhs.order_ && lhs.edges_ == rhs.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> adjacency_;
};

// A[n,k] with 3 <= n and 1 <= k <= n/2. Vertex u_i lives at index i-1 and
// v_i at index n+i-1; the subscript i may be any integer and is reduced into
// the residue system {1..n}.
class AccordionParams {
 public:
  static AccordionParams make(long long n, long long k);

  int n() const { return n_; }
  int k() const { return k_; }
  int order() const { return 2 * n_; }

  Vertex u(long long i) const;
  Vertex v(long long i) const;

  friend auto operator<=>(const AccordionParams&,
                          const AccordionParams&) = default;

 private:
  AccordionParams(int n, int k) : n_(n), k_(k) {}
  int n_;
  int k_;
};

// Ci[2n,{a,b}]. Lengths are reduced mod 2n and folded to min(r, 2n-r); the
// folded values must be distinct and lie in [1, n-1]. Vertex x_i lives at
// index i-1.
class CirculantParams {
 public:
  static CirculantParams make(long long n, long long a, long long b);

  int n() const { return n_; }
  int a() const { return a_; }
  int b() const { return b_; }
  int order() const { return 2 * n_; }

  Vertex x(long long i) const;

  friend auto operator<=>(const CirculantParams&,
                          const CirculantParams&) = default;

 private:
  CirculantParams(int n, int a, int b) : n_(n), a_(a), b_(b) {}
  int n_;
  int a_;
  int b_;
};

enum class AccordionEdgeKind {
  kOuterCycle,
  kInnerCycle,
  kVerticalSpoke,
  kDiagonalSpoke,
};

struct EdgeLength {
  int value = 0;
  friend auto operator<=>(const EdgeLength&, const EdgeLength&) = default;
};

using EdgeClass = std::variant<AccordionEdgeKind, EdgeLength>;

// A family graph together with one tag per edge; classes[i] tags
// graph.edges()[i].
struct TaggedGraph {
  Graph graph;
  std::vector<EdgeClass> classes;
};

Graph cycle_graph(int t);
Graph path_graph(int t);

// Vertex (g, h) is indexed g * H.order() + h.
Graph cartesian_product(const Graph& g, const Graph& h);

Graph accordion(const AccordionParams& p);
TaggedGraph accordion_tagged(const AccordionParams& p);

// A[n,k] minus the cycle edges u_{t q} u_{t q + 1} and v_{t q} v_{t q + 1},
// q = gcd(n,k). The result is a copy of C_{2n/q} x P_q.
Graph accordion_cut(const AccordionParams& p);

Graph circulant(const CirculantParams& p);
TaggedGraph circulant_tagged(const CirculantParams& p);

// Folds x into a circulant length for the given order: min(r, order - r)
// with r = x mod order.
int circulant_length(long long order, long long x);

// Quartic circulant of arbitrary order (odd orders included). Lengths are
// folded and must be distinct with 1 <= len and 2 * len < order.
Graph circulant_of_order(int order, long long a, long long b);

bool is_bipartite(const Graph& g);
bool is_connected(const Graph& g);
bool is_regular(const Graph& g, int d);

}  // namespace quartic
