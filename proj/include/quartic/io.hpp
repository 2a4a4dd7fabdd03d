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

#include <string>
#include <string_view>

#include "quartic/graph.hpp"
#include "quartic/vertex_map.hpp"

namespace quartic {

// {"order":N,"edges":[[i,j],...]} with 0-based ascending pairs in sorted
// order, no whitespace, newline-terminated.
std::string to_json(const Graph& g);

// Undirected DOT with node ids "0".."order-1".
std::string to_dot(const Graph& g);

// One "i j" line per edge.
std::string to_edgelist(const Graph& g);

// Accepts any JSON object with integer "order" and an "edges" array of
// two-element integer arrays; pairs may be unsorted. Throws ParseError.
Graph parse_graph(std::string_view text);

struct WitnessDocument {
  Graph source;
  Graph target;
  VertexMap mapping;  // source -> target
};

// {"source":<graph>,"target":<graph>,"mapping":[...]}, newline-terminated.
std::string to_json(const WitnessDocument& w);

// Throws ParseError on malformed input. Does not verify the map.
WitnessDocument parse_witness(std::string_view text);

}  // namespace quartic
