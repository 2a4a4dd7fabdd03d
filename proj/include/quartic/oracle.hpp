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
#include <optional>
#include <string>
#include <vector>

#include "quartic/graph.hpp"
#include "quartic/vertex_map.hpp"

namespace quartic {

// Brute-force isomorphism testing by color refinement and
// individualization, used as ground truth for the deciders. Intended for
// graphs of a few dozen vertices.

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;
inline constexpr const char* kNodeBudgetEnv = "QUARTIC_ORACLE_BUDGET";

// kDefaultNodeBudget unless QUARTIC_ORACLE_BUDGET holds a positive integer.
// Throws InvalidParameter on a malformed value.
std::uint64_t default_node_budget();

struct OracleOptions {
  std::uint64_t node_budget = default_node_budget();
  int max_canonical_order = 30;
};

// Per-vertex color after stable refinement, as a label-independent hash.
// Isomorphic graphs have equal signature multisets.
using RefinementSignature = std::vector<std::uint64_t>;

RefinementSignature refinement_signature(const Graph& g);

// A map g -> h passing verify_witness, or nullopt if the graphs are not
// isomorphic. Throws ResourceExhausted when the search visits more than
// options.node_budget nodes.
std::optional<VertexMap> are_isomorphic(const Graph& g, const Graph& h,
                                        const OracleOptions& options = {});

// Byte string that is equal for two graphs iff they are isomorphic: the
// lexicographically least relabeled edge list over all leaves of the
// refinement search tree. Throws ResourceExhausted above
// options.max_canonical_order vertices or past the node budget.
std::string canonical_key(const Graph& g, const OracleOptions& options = {});

}  // namespace quartic
