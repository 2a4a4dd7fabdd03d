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

#include "quartic/vertex_map.hpp"

#include <string>

#include "quartic/error.hpp"

namespace quartic {

VertexMap::VertexMap(std::vector<Vertex> mapping) : mapping_(std::move(mapping)) {
  std::vector<char> hit(mapping_.size(), 0);
  for (Vertex image : mapping_) {
    if (image < 0 || image >= static_cast<Vertex>(mapping_.size()) || hit[image]) {
      throw InvalidParameter("vertex map is not a permutation (image " +
                             std::to_string(image) + ")");
    }
    hit[image] = 1;
  }
}

VertexMap VertexMap::identity(int order) {
  std::vector<Vertex> m(order);
  for (int i = 0; i < order; ++i) m[i] = i;
  return VertexMap(std::move(m));
}

VertexMap VertexMap::inverse() const {
  std::vector<Vertex> inv(mapping_.size());
  for (std::size_t i = 0; i < mapping_.size(); ++i) {
    inv[mapping_[i]] = static_cast<Vertex>(i);
  }
  return VertexMap(std::move(inv));
}

VertexMap VertexMap::then(const VertexMap& next) const {
  if (next.source_order() != target_order()) {
    throw InvalidParameter("cannot compose vertex maps of different orders");
  }
  std::vector<Vertex> out(mapping_.size());
  for (std::size_t i = 0; i < mapping_.size(); ++i) out[i] = next[mapping_[i]];
  return VertexMap(std::move(out));
}

Graph relabel(const Graph& g, const VertexMap& m) {
  if (m.source_order() != g.order()) {
    throw InvalidParameter("relabel: map order does not match graph order");
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.push_back({m[e.u], m[e.v]});
  return {g.order(), std::move(edges)};
}

bool verify_witness(const Graph& g, const Graph& h, const VertexMap& m) {
  if (g.order() != h.order() || m.source_order() != g.order()) {
    throw InvalidParameter("verify_witness: orders differ (" +
                           std::to_string(g.order()) + ", " +
                           std::to_string(h.order()) + ", map " +
                           std::to_string(m.source_order()) + ")");
  }
  std::vector<char> hit(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (hit[m[v]]) return false;
    hit[m[v]] = 1;
  }
  if (g.size() != h.size()) return false;
  // Injective on edges plus equal edge counts gives the reverse implication.
  for (const Edge& e : g.edges()) {
    if (!h.has_edge(m[e.u], m[e.v])) return false;
  }
  return true;
}

}  // namespace quartic
