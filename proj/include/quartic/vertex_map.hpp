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

#include <span>
#include <vector>

#include "quartic/graph.hpp"

namespace quartic {

// A bijection [0, order) -> [0, order); mapping()[i] is the image of i.
class VertexMap {
 public:
  VertexMap() = default;

  // Throws InvalidParameter unless `mapping` is a permutation of
  // 0..mapping.size()-1.
  explicit VertexMap(std::vector<Vertex> mapping);

  static VertexMap identity(int order);

  int source_order() const { return static_cast<int>(mapping_.size()); }
  int target_order() const { return static_cast<int>(mapping_.size()); }
  std::span<const Vertex> mapping() const { return mapping_; }
  Vertex operator[](Vertex v) const { return mapping_[v]; }

  VertexMap inverse() const;

  // (*this followed by next): v -> next[(*this)[v]].
  VertexMap then(const VertexMap& next) const;

  friend bool operator==(const VertexMap&, const VertexMap&) = default;

 private:
  std::vector<Vertex> mapping_;
};

// The image of g under m: edge {x, y} becomes {m[x], m[y]}.
Graph relabel(const Graph& g, const VertexMap& m);

// True iff m is a bijection and {x,y} in E(g) <=> {m(x), m(y)} in E(h).
// Throws InvalidParameter if the orders of g, h and m disagree.
bool verify_witness(const Graph& g, const Graph& h, const VertexMap& m);

}  // namespace quartic
